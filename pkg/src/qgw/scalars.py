"""Exact coefficient field: rational functions over the Gaussian rationals.

Every coefficient in the workbench is a ``Scalar``: a canonical fraction of
multivariate polynomials in a fixed, ordered list of commuting indeterminates
(the deformation parameter ``q`` plus representation labels), with
coefficients in Q(i).  Canonical form is maintained by sympy's sparse
fraction fields (gcd cancelled, normalized denominator), so equality of
Scalars is exact and syntactic.  No floating point enters the core; floats
appear only in :func:`scalar_eval`, which is a diagnostic.
"""

from __future__ import annotations

import cmath
import numbers
from fractions import Fraction

import sympy
from sympy import I as _sympy_I
from sympy import Symbol
from sympy.polys.domains import QQ_I
from sympy.polys.fields import field as _mkfield


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtPoint(ArithmeticError):
    pass


class _Registry:
    """Global ordered indeterminate registry backing the scalar field."""

    def __init__(self, names):
        self.names = list(names)
        self._build()

    def _build(self):
        objs = _mkfield(",".join(self.names), QQ_I)
        self.field = objs[0]
        self.gens = dict(zip(self.names, objs[1:]))
        self.symbols = {n: Symbol(n) for n in self.names}

    def register(self, name):
        if name in self.names:
            return
        self.names.append(name)
        self._build()


_REG = _Registry(["q", "lam1", "lam2", "mu1", "mu2"])


def register_indeterminate(name: str) -> "Scalar":
    """Add a new indeterminate at the end of the global order.

    Existing Scalars keep working: they are lifted into the enlarged field
    lazily, on the first mixed operation.
    """
    _REG.register(name)
    return indet(name)


def _lift(f):
    """Re-embed a frac element into the current global field if needed."""
    if f.field is _REG.field:
        return f
    return _REG.field.from_expr(f.as_expr())


def _coerce(x):
    if isinstance(x, Scalar):
        return _lift(x.f)
    if isinstance(x, (int, Fraction)):
        return _REG.field.ground_new(QQ_I.convert(sympy.Rational(x)))
    if isinstance(x, sympy.Expr):
        return _REG.field.from_expr(x)
    raise TypeError(f"cannot coerce {x!r} to Scalar")


class Scalar:
    """Immutable exact rational function over Q(i)."""

    __slots__ = ("f",)

    def __init__(self, value=0):
        object.__setattr__(self, "f", _coerce(value) if not isinstance(value, Scalar) else value.f)

    @classmethod
    def _raw(cls, f):
        s = object.__new__(cls)
        object.__setattr__(s, "f", f)
        return s

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- arithmetic -------------------------------------------------------
    def _bin(self, other, op):
        try:
            a, b = _lift(self.f), _coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._raw(op(a, b))

    def __add__(self, other):
        return self._bin(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._bin(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._bin(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._bin(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            return self._bin(other, lambda a, b: a / b)
        except ZeroDivisionError:
            raise DivisionByZero("division by zero Scalar") from None

    def __rtruediv__(self, other):
        try:
            return self._bin(other, lambda a, b: b / a)
        except ZeroDivisionError:
            raise DivisionByZero("division by zero Scalar") from None

    def __pow__(self, n: int):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        if n >= 0:
            return Scalar._raw(_lift(self.f) ** int(n))
        if not self:
            raise DivisionByZero("0 ** negative power")
        return Scalar._raw(_lift(self.f) ** int(n))

    def __neg__(self):
        return Scalar._raw(-self.f)

    def __pos__(self):
        return self

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return _lift(self.f) == _coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(_lift(self.f))

    def __bool__(self):
        return bool(self.f)

    # -- inspection -------------------------------------------------------
    def indeterminates(self):
        """Names of indeterminates actually occurring in this Scalar."""
        free = self.f.as_expr().free_symbols
        return {s.name for s in free}

    def as_expr(self):
        return self.f.as_expr()

    def __str__(self):
        return str(self.f.as_expr()).replace("I", "i")

    def __repr__(self):
        return f"Scalar({self})"


# -- constructors ---------------------------------------------------------

def indet(name: str) -> Scalar:
    if name not in _REG.gens:
        raise KeyError(f"unregistered indeterminate {name!r}; call register_indeterminate")
    return Scalar._raw(_REG.gens[name])


def integer(n) -> Scalar:
    return Scalar(n)


ZERO = Scalar(0)
ONE = Scalar(1)


def imag_unit() -> Scalar:
    return Scalar._raw(_REG.field.from_expr(_sympy_I))


def qvar() -> Scalar:
    return indet("q")


def sign_pow(k: int) -> Scalar:
    """(-1)**k as a Scalar."""
    return ONE if k % 2 == 0 else -ONE


# -- string-dispatched arithmetic entry point -----------------------------

def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# -- serialization --------------------------------------------------------

def parse(text: str) -> Scalar:
    """Parse an expression over +,-,*,/,^ and integers, i, indeterminates."""
    local = dict(_REG.symbols)
    local["i"] = _sympy_I
    expr = sympy.sympify(text.replace("^", "**"), locals=local, rational=True)
    return Scalar(expr)


def render(a: Scalar) -> str:
    return str(a)


# -- numeric evaluation ---------------------------------------------------

def scalar_eval(a: Scalar, assignment: dict) -> complex:
    """Evaluate at a complex point.  Diagnostic only, never used for pass/fail.

    ``assignment`` maps indeterminate names to complex numbers and must cover
    all indeterminates of ``a``.  Raises PoleAtPoint when the denominator
    vanishes (within 1e-12 of the numerator's scale).
    """
    need = a.indeterminates()
    missing = need - set(assignment)
    if missing:
        raise KeyError(f"assignment missing indeterminates {sorted(missing)}")
    sub = {}
    for name, val in assignment.items():
        if name in _REG.symbols:
            c = complex(val)
            sub[_REG.symbols[name]] = sympy.Float(c.real, 17) + _sympy_I * sympy.Float(c.imag, 17)
    f = _lift(a.f)
    num = complex(f.numer.as_expr().subs(sub).evalf())
    den = complex(f.denom.as_expr().subs(sub).evalf())
    if abs(den) <= 1e-12:
        raise PoleAtPoint(f"denominator vanishes at {assignment}")
    return num / den
