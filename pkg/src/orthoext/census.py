"""Exhaustive classification of squared norms in small dimensions.

Searches here are brute force on purpose: they serve as the independent
check on the constructive routines in :mod:`orthoext.completion`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterator

from .completion import Status, complete_d3
from .errors import InternalFailure, InvalidInput
from .intvec import IntVector, dot
from .squares import (
    bad_prime,
    check_budget,
    default_budget,
    enumerate_reps,
    is_square,
    sum_two_squares,
)

__all__ = [
    "CensusReport",
    "CuriousReport",
    "RepWitness",
    "classify_N_d3",
    "difference_set_d3",
    "enumerate_reps",
    "find_basis_exhaustive",
    "find_partner",
    "iter_norm_vectors",
    "sum_two_squares",
    "verify_curious",
]

log = logging.getLogger(__name__)

# Beyond this bound every N not divisible by 4 has at least two essentially
# different representations as a sum of three squares.
LARGEST_ESSENTIALLY_UNIQUE = 427


def iter_norm_vectors(n: int, d: int, budget: int | None = None) -> Iterator[IntVector]:
    """Every vector of Z^d with squared norm ``n``, in lexicographic order."""
    check_budget(n, d, budget)

    def rec(rem: int, k: int, prefix: tuple[int, ...]):
        if k == 1:
            r = isqrt(rem)
            if r * r == rem:
                if r:
                    yield prefix + (-r,)
                yield prefix + (r,)
            return
        r = isqrt(rem)
        for x in range(-r, r + 1):
            yield from rec(rem - x * x, k - 1, prefix + (x,))

    for t in rec(n, d, ()):
        yield IntVector(t)


def find_partner(v: IntVector, budget: int | None = None) -> IntVector | None:
    """First (lexicographic) ``w`` with ``w.v = 0`` and ``|w| = |v|``, or ``None``
    once the whole sphere has been scanned."""
    if v.is_zero():
        raise InvalidInput("the zero vector has no partner")
    n = v.norm2
    check_budget(n, v.dim, budget)
    d = v.dim
    vc = v.coords

    def rec(rem: int, k: int, acc: int, prefix: tuple[int, ...]):
        if k == d - 1:
            # last coordinate is pinned by the norm; test both signs
            r = isqrt(rem)
            if r * r != rem:
                return None
            for x in ((-r, r) if r else (0,)):
                if acc + vc[k] * x == 0:
                    return prefix + (x,)
            return None
        r = isqrt(rem)
        for x in range(-r, r + 1):
            found = rec(rem - x * x, k + 1, acc + vc[k] * x, prefix + (x,))
            if found is not None:
                return found
        return None

    w = rec(n, 0, 0, ())
    return None if w is None else IntVector(w)


def find_basis_exhaustive(v: IntVector, budget: int | None = None) -> tuple[IntVector, IntVector] | None:
    """Brute-force search for two vectors completing ``v`` in Z^3."""
    if v.dim != 3:
        raise InvalidInput("find_basis_exhaustive works in dimension 3")
    n = v.norm2
    sphere = [w for w in iter_norm_vectors(n, 3, budget) if dot(w, v) == 0]
    for i, w in enumerate(sphere):
        for u in sphere[i + 1 :]:
            if dot(u, w) == 0:
                return w, u
    return None


@dataclass(frozen=True)
class RepWitness:
    rep: IntVector
    partner: IntVector | None
    basis: tuple[IntVector, IntVector] | None = None


@dataclass(frozen=True)
class CensusReport:
    N: int
    dim: int
    reps_canonical: tuple[IntVector, ...]
    in_C3_12: bool
    in_C3_13: bool
    witnesses: dict = field(default_factory=dict)
    trivial: bool = False

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "dim": self.dim,
            "reps_canonical": [list(r) for r in self.reps_canonical],
            "in_C3_12": self.in_C3_12,
            "in_C3_13": self.in_C3_13,
            "trivial": self.trivial,
            "witnesses": {
                " ".join(map(str, k)): {
                    "partner": None if w.partner is None else list(w.partner),
                    "basis": None if w.basis is None else [list(b) for b in w.basis],
                }
                for k, w in self.witnesses.items()
            },
        }


def classify_N_d3(n: int, budget: int | None = None, cross_check: bool = False) -> CensusReport:
    """Membership of ``n`` in the d=3 extendability sets (1 -> 2 and 1 -> 3).

    A norm with no representation at all is reported as trivial and in
    neither set.  With ``cross_check`` every constructive basis answer is
    confirmed by :func:`find_basis_exhaustive`.
    """
    if n <= 0:
        raise InvalidInput(f"N must be positive, got {n}")
    check_budget(n, 3, budget)
    reps = [IntVector(r) for r in enumerate_reps(n, 3, budget)]
    square = is_square(n)
    witnesses = {}
    all_partner = True
    all_basis = square
    for r in reps:
        partner = find_partner(r, budget)
        basis = None
        if square:
            res = complete_d3(r)
            if res.status is not Status.COMPLETED:
                raise InternalFailure(f"complete_d3 failed on {r} although N={n} is a square")
            basis = res.added
            partner = partner or res.added[0]
        if cross_check:
            brute = find_basis_exhaustive(r, budget)
            if (brute is not None) != square:
                raise InternalFailure(f"exhaustive basis search disagrees at {r}, N={n}")
        all_partner &= partner is not None
        all_basis &= basis is not None
        witnesses[r.coords] = RepWitness(r, partner, basis)
    if len(reps) == 1 and n % 4 and n > LARGEST_ESSENTIALLY_UNIQUE:
        log.warning("N=%d has a single representation beyond %d", n, LARGEST_ESSENTIALLY_UNIQUE)
    return CensusReport(
        N=n,
        dim=3,
        reps_canonical=tuple(reps),
        in_C3_12=bool(reps) and all_partner,
        in_C3_13=bool(reps) and all_basis,
        witnesses=witnesses,
        trivial=len(reps) <= 1,
    )


def _classify_flags(n: int) -> tuple[int, bool, bool, bool]:
    r = classify_N_d3(n, budget=n)
    return n, r.in_C3_12, r.in_C3_13, r.trivial


def difference_set_d3(limit: int, budget: int | None = None, threads: int = 1) -> list[int]:
    """Non-trivial ``N < limit`` extendable from 1 to 2 vectors but not to a basis."""
    check_budget(limit - 1, 3, budget)
    ns = range(1, limit)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            rows = list(ex.map(_classify_flags, ns, chunksize=16))
    else:
        rows = [_classify_flags(n) for n in ns]
    rows.sort()
    return [n for n, in12, in13, trivial in rows if in12 and not in13 and not trivial]


@dataclass
class CuriousReport:
    limit: int
    checked: int = 0
    nonempty: list[int] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)
    blocked: list[int] = field(default_factory=list)
    blocked_violations: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.blocked_violations


def has_orthogonal_pair(n: int, budget: int | None = None) -> bool:
    """Whether some two orthogonal vectors of Z^3 share squared norm ``n``."""
    return any(find_partner(IntVector(r), budget) is not None for r in enumerate_reps(n, 3, budget))


def verify_curious(limit: int, budget: int | None = None) -> CuriousReport:
    """Check empirically that orthogonal pairs in Z^3 only occur at norms
    that are sums of two squares, and that a prime ``3 mod 4`` with odd
    exponent leaves no pair."""
    check_budget(limit - 1, 3, budget)
    rep = CuriousReport(limit)
    for n in range(1, limit):
        rep.checked += 1
        pair = has_orthogonal_pair(n, budget)
        if pair:
            rep.nonempty.append(n)
            if not sum_two_squares(n):
                rep.violations.append(n)
        if bad_prime(n) is not None:
            rep.blocked.append(n)
            if pair:
                rep.blocked_violations.append(n)
    return rep
