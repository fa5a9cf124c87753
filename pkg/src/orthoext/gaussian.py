"""Gaussian integers with Euclidean division and extended gcd."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput, checked


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    def __post_init__(self):
        checked(self.re)
        checked(self.im)

    def __add__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(checked(self.re + other.re), checked(self.im + other.im))

    def __sub__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(checked(self.re - other.re), checked(self.im - other.im))

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: GaussianInt) -> GaussianInt:
        return gauss_mul(self, other)

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    @property
    def norm(self) -> int:
        return checked(self.re * self.re + self.im * self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)


def gauss_mul(x: GaussianInt, y: GaussianInt) -> GaussianInt:
    re = checked(checked(x.re * y.re) - checked(x.im * y.im))
    im = checked(checked(x.re * y.im) + checked(x.im * y.re))
    return GaussianInt(re, im)


def _nearest(num: int, den: int) -> int:
    # nearest integer to num/den (den > 0), exact halves go down
    return -((den - 2 * num) // (2 * den))


def gauss_divmod(x: GaussianInt, y: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Return ``(q, r)`` with ``x = q*y + r`` and ``norm(r) <= norm(y)/2``."""
    if y.is_zero():
        raise ZeroDivisionError("Gaussian division by zero")
    n = y.norm
    t = gauss_mul(x, y.conj())
    q = GaussianInt(_nearest(t.re, n), _nearest(t.im, n))
    r = x - gauss_mul(q, y)
    return q, r


def gauss_ext_gcd(
    x: GaussianInt, y: GaussianInt
) -> tuple[GaussianInt, GaussianInt, GaussianInt]:
    """Extended Euclid in Z[i]: returns ``(g, s, t)`` with ``s*x + t*y == g``.

    ``g`` is *a* gcd; no associate is preferred.
    """
    if x.is_zero() and y.is_zero():
        raise InvalidInput("gcd of two zeros is undefined")
    r0, r1 = x, y
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero():
        q, r = gauss_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - gauss_mul(q, s1)
        t0, t1 = t1, t0 - gauss_mul(q, t1)
    return r0, s0, t0
