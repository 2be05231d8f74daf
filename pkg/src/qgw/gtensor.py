"""k-fold Z2-graded tensor powers of a presented algebra.

Multiplication is legwise with the Koszul rule in super mode:
(a (x) b)(c (x) d) = (-1)^(deg b * deg c) ac (x) bd.  Bosonic mode drops the
sign.  Mode is a property of the tensor context, not of the algebra, since
the same presentation is tensored both ways in different checks.

Terms are keyed by k-tuples of normal-form words; every word is homogeneous,
so the sign of a product of basis tensors is always defined.
"""

from __future__ import annotations

from .ncalg import Element, Presentation
from .scalars import ONE, ZERO, Scalar

BOSONIC = "bosonic"
SUPER = "super"


class ArityMismatch(ValueError):
    pass


class ModeMismatch(ValueError):
    pass


class BadPositions(ValueError):
    pass


class TensorElement:
    __slots__ = ("pres", "arity", "mode", "terms")

    def __init__(self, pres: Presentation, arity: int, terms, mode=BOSONIC, normalize=True):
        if mode not in (BOSONIC, SUPER):
            raise ValueError(f"unknown mode {mode}")
        self.pres = pres
        self.arity = arity
        self.mode = mode
        raw = terms.items() if isinstance(terms, dict) else terms
        acc: dict[tuple, Scalar] = {}
        for legs, c in raw:
            legs = tuple(tuple(w) for w in legs)
            if len(legs) != arity:
                raise ArityMismatch(f"term {legs} has arity {len(legs)}, expected {arity}")
            c = Scalar(c)
            if not c:
                continue
            if normalize:
                for key, cc in _expand(pres, legs, c):
                    _accum(acc, key, cc)
            else:
                _accum(acc, legs, c)
        self.terms = acc

    # -- ring structure ---------------------------------------------------
    def _check(self, other):
        if self.pres is not other.pres:
            raise ValueError("tensors over different presentations")
        if self.arity != other.arity:
            raise ArityMismatch(f"{self.arity} vs {other.arity}")
        if self.mode != other.mode:
            raise ModeMismatch(f"{self.mode} vs {other.mode}")

    def __add__(self, other):
        if isinstance(other, (int, Scalar)):
            other = unit(self.pres, self.arity, self.mode) * Scalar(other)
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _accum(t, k, c)
        return TensorElement(self.pres, self.arity, t, self.mode, normalize=False)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Scalar)):
            other = unit(self.pres, self.arity, self.mode) * Scalar(other)
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.pres, self.arity,
                             {k: -c for k, c in self.terms.items()}, self.mode, normalize=False)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c0 = Scalar(other)
            return TensorElement(self.pres, self.arity,
                                 {k: c * c0 for k, c in self.terms.items()},
                                 self.mode, normalize=False)
        return tensor_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = unit(self.pres, self.arity, self.mode) * Scalar(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.pres is other.pres and self.arity == other.arity
                and self.mode == other.mode and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def leg_degrees(self, legs):
        return tuple(self.pres.degree(w) for w in legs)

    def flip(self, i=0, j=1):
        """Swap two legs (the map tau, used for the opposite coproduct)."""
        out = {}
        for legs, c in self.terms.items():
            ll = list(legs)
            ll[i], ll[j] = ll[j], ll[i]
            if self.mode == SUPER:
                if self.pres.degree(legs[i]) and self.pres.degree(legs[j]):
                    c = -c
            _accum(out, tuple(ll), c)
        return TensorElement(self.pres, self.arity, out, self.mode, normalize=False)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for legs, c in self.terms.items():
            mono = " (x) ".join("*".join(w) if w else "1" for w in legs)
            bits.append(f"({c})*[{mono}]")
        return " + ".join(bits)

    def __repr__(self):
        return f"TensorElement[{self}]"


def _accum(acc, key, c):
    s = acc.get(key, ZERO) + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def _expand(pres, legs, coeff):
    """Normal-form every leg and expand the resulting products of sums."""
    out = [((), coeff)]
    for w in legs:
        red = pres.reduce_terms({tuple(w): ONE})
        nxt = []
        for prefix, c in out:
            for w2, c2 in red.items():
                nxt.append((prefix + (w2,), c * c2))
        out = nxt
    return out


def unit(pres, arity, mode=BOSONIC) -> TensorElement:
    return TensorElement(pres, arity, {((),) * arity: ONE}, mode, normalize=False)


def zero(pres, arity, mode=BOSONIC) -> TensorElement:
    return TensorElement(pres, arity, {}, mode, normalize=False)


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    s._check(t)
    pres, k, mode = s.pres, s.arity, s.mode
    acc: dict[tuple, Scalar] = {}
    deg = pres.degree
    for u, cu in s.terms.items():
        udeg = [deg(w) for w in u]
        for v, cv in t.terms.items():
            c = cu * cv
            if mode == SUPER:
                sgn = 0
                for i in range(k):
                    if deg(v[i]):
                        sgn += sum(udeg[i + 1 :])
                if sgn % 2:
                    c = -c
            legs = tuple(u[i] + v[i] for i in range(k))
            for key, cc in _expand(pres, legs, c):
                _accum(acc, key, cc)
    return TensorElement(pres, k, acc, mode, normalize=False)


def embed_leg(e, positions, arity, mode=BOSONIC) -> TensorElement:
    """Place an Element or TensorElement at the given legs, identity elsewhere.

    Positions are 1-based and strictly increasing, matching the R12/R13/R23
    leg notation.
    """
    if isinstance(e, Element):
        e = TensorElement(e.pres, 1, {(w,): c for w, c in e.terms.items()}, mode, normalize=False)
    positions = list(positions)
    if (len(positions) != e.arity or any(p < 1 or p > arity for p in positions)
            or sorted(set(positions)) != positions):
        raise BadPositions(f"positions {positions} for arity {e.arity} into {arity}")
    acc = {}
    for legs, c in e.terms.items():
        new = [()] * arity
        for p, w in zip(positions, legs):
            new[p - 1] = w
        _accum(acc, tuple(new), c)
    return TensorElement(e.pres, arity, acc, mode, normalize=False)


def apply_to_leg(t: TensorElement, leg: int, fn, out_arity_delta: int) -> TensorElement:
    """Substitute leg ``leg`` (0-based) through fn: word -> TensorElement.

    fn must be linear on words; its output arity is 1 + out_arity_delta.
    Used for (Delta (x) id) style maps; splicing in place needs no sign.
    """
    pres, mode = t.pres, t.mode
    new_arity = t.arity + out_arity_delta
    acc: dict[tuple, Scalar] = {}
    for legs, c in t.terms.items():
        sub = fn(legs[leg])
        for slegs, sc in sub.terms.items():
            key = legs[:leg] + slegs + legs[leg + 1 :]
            _accum(acc, key, c * sc)
    return TensorElement(pres, new_arity, acc, mode, normalize=False)
