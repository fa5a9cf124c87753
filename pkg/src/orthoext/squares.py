"""Sum-of-squares helpers shared by the completion engine and the census."""

from __future__ import annotations

import os
from math import isqrt

from .errors import BudgetExceeded, InvalidInput

DEFAULT_BUDGET = 5000
DEFAULT_BUDGET_HIGH_DIM = 1000
MAX_REP_DIM = 8


def default_budget(dim: int = 3) -> int:
    """Cap on N for searches in dimension ``dim``; ``ORTHO_BUDGET`` overrides."""
    env = os.environ.get("ORTHO_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidInput(f"ORTHO_BUDGET={env!r} is not an integer") from None
    return DEFAULT_BUDGET if dim <= 4 else DEFAULT_BUDGET_HIGH_DIM


def check_budget(n: int, dim: int, budget: int | None) -> None:
    cap = default_budget(dim) if budget is None else budget
    if n > cap:
        raise BudgetExceeded(f"N={n} exceeds the search budget {cap} (dimension {dim})")


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def enumerate_reps(n: int, d: int, budget: int | None = None) -> list[tuple[int, ...]]:
    """Canonical solutions of ``x_1^2 + ... + x_d^2 = n``.

    Each solution is nonnegative and sorted ascending, so every orbit under
    signed coordinate permutations appears exactly once.  The list is sorted.
    """
    if n < 0:
        raise InvalidInput(f"cannot represent negative {n}")
    if not 1 <= d <= MAX_REP_DIM:
        raise InvalidInput(f"dimension {d} outside 1..{MAX_REP_DIM}")
    check_budget(n, d, budget)
    out: list[tuple[int, ...]] = []

    def rec(rem: int, slots: int, cap: int, tail: tuple[int, ...]) -> None:
        # tail holds the largest coordinates chosen so far, descending
        if slots == 0:
            if rem == 0:
                out.append(tail[::-1])
            return
        if rem > slots * cap * cap:
            return
        hi = min(cap, isqrt(rem))
        for x in range(hi, -1, -1):
            if x * x * slots < rem:
                break
            rec(rem - x * x, slots - 1, x, tail + (x,))

    rec(n, d, isqrt(n), ())
    out.sort()
    return out


def _factor(n: int) -> dict[int, int]:
    f: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            f[p] = f.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        f[n] = f.get(n, 0) + 1
    return f


def bad_prime(n: int) -> int | None:
    """A prime ``q = 3 (mod 4)`` dividing ``n`` to an odd power, if any."""
    if n <= 0:
        return None
    for p, e in _factor(n).items():
        if p % 4 == 3 and e % 2 == 1:
            return p
    return None


def sum_two_squares(n: int) -> bool:
    if n < 0:
        raise InvalidInput(f"cannot represent negative {n}")
    if n == 0:
        return True
    return bad_prime(n) is None


def two_square_rep(n: int) -> tuple[int, int] | None:
    reps = enumerate_reps(n, 2, budget=max(n, 0))
    return reps[-1] if reps else None
