"""Cayley numbers through their left-multiplication matrix, and the 7D and
8D cross products derived from it.

The sign convention is fixed by ``_CAYLEY`` below; nothing else in the
module encodes octonion signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InternalFailure, InvalidInput, checked
from .intvec import IntMatrix, IntVector, dot, verify_ortho_set

# Entry (r, c) of C(x) is sign * x[index].
_CAYLEY = [
    "+0 -1 -2 -3 -4 -5 -6 -7",
    "+1 +0 -4 -7 +2 -6 +5 +3",
    "+2 +4 +0 -5 -1 +3 -7 +6",
    "+3 +7 +5 +0 -6 -2 +4 -1",
    "+4 -2 +1 +6 +0 -7 -3 +5",
    "+5 +6 -3 +2 +7 +0 -1 -4",
    "+6 -5 +7 -4 +3 +1 +0 -2",
    "+7 -3 -6 +1 -5 +4 +2 +0",
]
_TABLE = [[(1 if t[0] == "+" else -1, int(t[1:])) for t in row.split()] for row in _CAYLEY]


@dataclass(frozen=True)
class Octonion:
    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        cs = tuple(coords)
        if len(cs) != 8:
            raise DimensionMismatch(f"an octonion has 8 coordinates, got {len(cs)}")
        for c in cs:
            checked(c)
        object.__setattr__(self, "coords", cs)

    @classmethod
    def unit(cls, j: int) -> Octonion:
        c = [0] * 8
        c[j] = 1
        return cls(c)

    def __mul__(self, other: Octonion) -> Octonion:
        return cayley_mul(self, other)

    def conj(self) -> Octonion:
        return Octonion((self.coords[0],) + tuple(-c for c in self.coords[1:]))

    @property
    def norm2(self) -> int:
        return dot(self.to_vector(), self.to_vector())

    def to_vector(self) -> IntVector:
        return IntVector(self.coords)


def _as_octonion(x) -> Octonion:
    if isinstance(x, Octonion):
        return x
    return Octonion(x)


def cayley_matrix(x: Octonion | IntVector | Sequence[int]) -> IntMatrix:
    xs = _as_octonion(x).coords
    return IntMatrix([s * xs[k] for s, k in row] for row in _TABLE)


def cayley_mul(x: Octonion, y: Octonion) -> Octonion:
    x, y = _as_octonion(x), _as_octonion(y)
    return Octonion(cayley_matrix(x).apply(y.to_vector()).coords)


def _check_dim(v: IntVector, d: int) -> None:
    if v.dim != d:
        raise DimensionMismatch(f"expected dimension {d}, got {v.dim}")


def cross7(v: IntVector, w: IntVector) -> IntVector:
    """Binary cross product on Z^7: the pure block of ``C((0, v))`` applied to ``w``."""
    _check_dim(v, 7)
    _check_dim(w, 7)
    c = cayley_matrix((0,) + v.coords)
    return IntVector(
        dot(IntVector(c.rows[i].coords[1:]), w) for i in range(1, 8)
    )


def cross8_ternary(x: IntVector, y: IntVector, z: IntVector) -> IntVector:
    """``x × y × z = -C(x) C(y*) z + (y.z) x - (z.x) y + (x.y) z``."""
    for v in (x, y, z):
        _check_dim(v, 8)
    ystar = (y[0],) + tuple(-c for c in y.coords[1:])
    t = cayley_matrix(x).apply(cayley_matrix(ystar).apply(z))
    return -t + x.scale(dot(y, z)) - y.scale(dot(z, x)) + z.scale(dot(x, y))


def _divisor_check(v: IntVector, k: int, name: str) -> None:
    if k <= 0:
        raise InvalidInput(f"{name} must be a positive integer, got {k}")
    if any(c % k for c in v):
        raise InvalidInput(f"{name}={k} does not divide every coordinate of {v}")


def complete_d7_pair(v: IntVector, w: IntVector, k1: int, k2: int) -> IntVector:
    """Third vector for an orthogonal pair in Z^7 of squared norm ``(k1 k2)^2``
    with ``k1 | v`` and ``k2 | w``."""
    _check_dim(v, 7)
    _check_dim(w, 7)
    s = verify_ortho_set([v, w])
    if s.squared_norm != (k1 * k2) ** 2:
        raise InvalidInput(f"squared norm {s.squared_norm} != (K1*K2)^2 = {(k1 * k2) ** 2}")
    _divisor_check(v, k1, "K1")
    _divisor_check(w, k2, "K2")
    u = cross7(v.exact_div(k1), w.exact_div(k2))
    verify_ortho_set([v, w, u])
    return u


def complete_d7_by_chance(v: IntVector, w: IntVector) -> IntVector | None:
    """``cross7(v, w) / sqrt(N)`` when N is square and the division is exact."""
    _check_dim(v, 7)
    _check_dim(w, 7)
    s = verify_ortho_set([v, w])
    r = isqrt(s.squared_norm)
    if r * r != s.squared_norm or r == 0:
        return None
    c = cross7(v, w)
    if any(x % r for x in c):
        return None
    u = c.exact_div(r)
    verify_ortho_set([v, w, u])
    return u


def find_d7_divisors(v: IntVector, w: IntVector) -> tuple[int, int] | None:
    """Smallest ``K1`` (with matching ``K2``) satisfying the divisibility hypotheses."""
    s = verify_ortho_set([v, w])
    r = isqrt(s.squared_norm)
    if r * r != s.squared_norm:
        return None
    from math import gcd

    gv, gw = gcd(*v.coords), gcd(*w.coords)
    for k1 in range(1, r + 1):
        if r % k1 == 0 and gv % k1 == 0 and gw % (r // k1) == 0:
            return k1, r // k1
    return None


def complete_d8_triple(
    v1: IntVector, v2: IntVector, v3: IntVector, k1: int, k2: int, k3: int
) -> IntVector:
    """Fourth vector for an orthogonal triple in Z^8 of squared norm
    ``k1 k2 k3`` with ``kj | vj``."""
    for v in (v1, v2, v3):
        _check_dim(v, 8)
    s = verify_ortho_set([v1, v2, v3])
    if s.squared_norm != k1 * k2 * k3:
        raise InvalidInput(f"squared norm {s.squared_norm} != K1*K2*K3 = {k1 * k2 * k3}")
    for v, k, name in ((v1, k1, "K1"), (v2, k2, "K2"), (v3, k3, "K3")):
        _divisor_check(v, k, name)
    w = cross8_ternary(v1.exact_div(k1), v2.exact_div(k2), v3.exact_div(k3))
    if w.norm2 != s.squared_norm:
        raise InternalFailure(f"ternary cross product has squared norm {w.norm2}")
    verify_ortho_set([v1, v2, v3, w])
    return w
