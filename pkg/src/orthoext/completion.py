"""Equal-norm orthogonal completion of integer vector sets.

:func:`complete` dispatches on dimension and input size to the constructive
routines below.  No routine here searches; exhaustive fallbacks live in
:mod:`orthoext.census`.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Sequence

from .errors import InternalFailure, InvalidInput
from .intvec import (
    IntMatrix,
    IntVector,
    OrthoSet,
    delete_column,
    determinant,
    dot,
    verify_ortho_set,
)
from .octonion import (
    cayley_matrix,
    complete_d7_by_chance,
    complete_d7_pair,
    complete_d8_triple,
    find_d7_divisors,
)
from .quaternion import (
    QI,
    QJ,
    QK,
    UNITS,
    from_vector4,
    pythagorean_param,
    quat_mul,
    sandwich,
)
from .squares import enumerate_reps, is_square, sum_two_squares

log = logging.getLogger(__name__)


class Status(enum.Enum):
    COMPLETED = "Completed"
    PARTIALLY_EXTENDED = "PartiallyExtended"
    IMPOSSIBLE = "Impossible"
    NOT_SUPPORTED = "NotSupported"


class Reason(enum.Enum):
    NON_SQUARE_NORM_ODD_DIM = "NonSquareNormOddDim"
    TWO_SQUARE_OBSTRUCTION = "TwoSquareObstruction"
    NO_PARTNER = "NoPartner"
    HYPOTHESES_NOT_MET = "HypothesesNotMet"
    UNSUPPORTED_CASE = "UnsupportedCase"


REASON_TEXT = {
    Reason.NON_SQUARE_NORM_ODD_DIM: "odd dimension with non-square squared norm: no full basis exists",
    Reason.TWO_SQUARE_OBSTRUCTION: "squared norm is not a sum of two squares",
    Reason.NO_PARTNER: "no equal-norm orthogonal partner (exhaustive)",
    Reason.HYPOTHESES_NOT_MET: "divisibility hypotheses of the available construction not met",
    Reason.UNSUPPORTED_CASE: "no constructive method for this dimension and input size",
}


@dataclass(frozen=True)
class CompletionResult:
    status: Status
    given: tuple[IntVector, ...]
    added: tuple[IntVector, ...] = ()
    squared_norm: int = 0
    reason: Reason | None = None
    detail: str = ""

    @property
    def vectors(self) -> tuple[IntVector, ...]:
        return self.given + self.added

    @property
    def ok(self) -> bool:
        return self.status in (Status.COMPLETED, Status.PARTIALLY_EXTENDED)

    def explain(self) -> str:
        if self.reason is None:
            return self.detail
        text = REASON_TEXT[self.reason]
        return f"{text} ({self.detail})" if self.detail else text


def _result(s: OrthoSet, added, complete_expected: bool) -> CompletionResult:
    added = tuple(added)
    full = verify_ortho_set(list(s.vectors) + list(added))
    if full.squared_norm != s.squared_norm:
        raise InternalFailure("completion changed the squared norm")
    if complete_expected and not full.is_complete():
        raise InternalFailure(f"expected {full.dim} vectors, built {len(full)}")
    status = Status.COMPLETED if full.is_complete() else Status.PARTIALLY_EXTENDED
    return CompletionResult(status, s.vectors, added, s.squared_norm)


def _impossible(s: OrthoSet, reason: Reason, detail: str = "") -> CompletionResult:
    return CompletionResult(Status.IMPOSSIBLE, s.vectors, (), s.squared_norm, reason, detail)


def _unsupported(s: OrthoSet, reason: Reason = Reason.UNSUPPORTED_CASE, detail: str = ""):
    return CompletionResult(Status.NOT_SUPPORTED, s.vectors, (), s.squared_norm, reason, detail)


def _as_set(s) -> OrthoSet:
    return s if isinstance(s, OrthoSet) else verify_ortho_set(list(s))


def codim1_vector(s: OrthoSet) -> IntVector | None:
    """The signed-minor vector orthogonal to ``d-1`` rows, or ``None`` when it
    is not integral (odd ``d``, non-square ``N``)."""
    d, n = s.dim, s.squared_norm
    if len(s) != d - 1:
        raise InvalidInput(f"need {d - 1} vectors in dimension {d}, got {len(s)}")
    if d % 2 == 0:
        scale = n ** ((d - 2) // 2)
    else:
        r = isqrt(n)
        if r * r != n:
            return None
        scale = r ** (d - 2)
    m = IntMatrix(s.vectors)
    w = []
    for j in range(1, d + 1):
        minor = determinant(delete_column(m, j))
        q, rem = divmod(minor, scale)
        if rem:
            raise InternalFailure(
                f"minor {j} = {minor} not divisible by N^((d-2)/2) = {scale}"
            )
        w.append(-q if j % 2 else q)
    return IntVector(w)


def codim1_complete(s) -> CompletionResult:
    s = _as_set(s)
    if s.dim < 2:
        raise InvalidInput("codimension-1 completion needs dimension >= 2")
    w = codim1_vector(s)
    if w is None:
        return _impossible(s, Reason.NON_SQUARE_NORM_ODD_DIM, f"N={s.squared_norm}")
    return _result(s, [w], complete_expected=True)


def complete_d3(v: IntVector) -> CompletionResult:
    if v.dim != 3:
        raise InvalidInput(f"complete_d3 takes a 3-vector, got dimension {v.dim}")
    if v.is_zero():
        raise InvalidInput("cannot complete the zero vector")
    s = verify_ortho_set([v])
    if not is_square(s.squared_norm):
        return _impossible(s, Reason.NON_SQUARE_NORM_ODD_DIM, f"N={s.squared_norm}")
    g = gcd(*v.coords)
    q, u = pythagorean_param(v.exact_div(g))
    frame = [sandwich(q, w.quaternion).vector_part() for w in UNITS]
    if frame[u.index].scale(g) != v:
        raise InternalFailure("Pythagorean parametrization did not reproduce the input")
    added = [frame[w.index].scale(g) for w in UNITS if w != u]
    return _result(s, added, complete_expected=True)


def left_unit_frame(v: IntVector) -> list[IntVector]:
    """Coordinates of ``i v``, ``j v``, ``k v`` for ``v`` read as a quaternion."""
    qv = from_vector4(v)
    return [quat_mul(u, qv).to_vector() for u in (QI, QJ, QK)]


def _third_d4(v: IntVector, w: IntVector, n: int) -> IntVector:
    a, b, c = left_unit_frame(v)
    proj = [dot(w, x) for x in (a, b, c)]
    g = gcd(*proj, n)
    ell = IntVector(p // g for p in proj)
    Q = n // g
    if ell.norm2 != Q * Q:
        raise InternalFailure(f"|l|^2 = {ell.norm2} differs from Q^2 = {Q * Q}")
    if Q % 2 == 0:
        raise InternalFailure(f"Q = {Q} is even")
    q, u = pythagorean_param(ell)
    u2 = next(x for x in UNITS if x != u)
    k = sandwich(q, u2.quaternion).vector_part()
    comb = a.scale(k[0]) + b.scale(k[1]) + c.scale(k[2])
    if any(x % Q for x in comb):
        raise InternalFailure(f"Q = {Q} does not divide {comb}")
    return comb.exact_div(Q)


def complete_d4(s) -> CompletionResult:
    s = _as_set(s)
    if s.dim != 4:
        raise InvalidInput(f"complete_d4 takes 4-vectors, got dimension {s.dim}")
    if s.squared_norm == 0:
        raise InvalidInput("cannot complete zero vectors")
    n1 = len(s)
    if n1 == 4:
        return _result(s, [], complete_expected=True)
    if n1 == 1:
        return _result(s, left_unit_frame(s[0]), complete_expected=True)
    if n1 == 3:
        return codim1_complete(s)
    u = _third_d4(s[0], s[1], s.squared_norm)
    three = verify_ortho_set([s[0], s[1], u])
    w = codim1_vector(three)
    return _result(s, [u, w], complete_expected=True)


def _block_frames(v: IntVector, width: int) -> list[IntVector]:
    """Blockwise left unit multiplication: ``width-1`` new vectors orthogonal to ``v``."""
    blocks = [IntVector(v.coords[i : i + width]) for i in range(0, v.dim, width)]
    if width == 4:
        per_block = [left_unit_frame(b) for b in blocks]
    else:
        per_block = [list(cayley_matrix(b).transpose().rows[1:]) for b in blocks]
    out = []
    for r in range(width - 1):
        coords: list[int] = []
        for frames in per_block:
            coords.extend(frames[r].coords)
        out.append(IntVector(coords))
    return out


def _d8_divisors(s: OrthoSet) -> tuple[int, int, int] | None:
    n = s.squared_norm
    gs = [gcd(*v.coords) for v in s]
    for k1 in range(1, n + 1):
        if n % k1 or gs[0] % k1:
            continue
        rest = n // k1
        for k2 in range(1, rest + 1):
            if rest % k2 or gs[1] % k2:
                continue
            k3 = rest // k2
            if gs[2] % k3 == 0:
                return k1, k2, k3
    return None


def complete(vectors: Sequence[IntVector] | OrthoSet) -> CompletionResult:
    """Extend an orthogonal equal-norm set as far as a constructive result allows."""
    s = _as_set(vectors)
    d, n1, n = s.dim, len(s), s.squared_norm
    if n == 0:
        raise InvalidInput("cannot complete zero vectors")
    if n1 == d:
        return _result(s, [], complete_expected=True)
    if d % 2 == 1 and not is_square(n):
        return _impossible(s, Reason.NON_SQUARE_NORM_ODD_DIM, f"N={n}")
    if n1 == d - 1:
        return codim1_complete(s)
    if d == 3:
        return complete_d3(s[0])
    if d == 4:
        return complete_d4(s)
    if d == 8 and n1 == 1:
        cols = cayley_matrix(s[0]).transpose().rows
        return _result(s, cols[1:], complete_expected=True)
    if n1 == 1 and d % 8 == 0:
        return _result(s, _block_frames(s[0], 8), complete_expected=False)
    if n1 == 1 and d % 4 == 0:
        return _result(s, _block_frames(s[0], 4), complete_expected=False)
    if d == 7 and n1 == 2:
        ks = find_d7_divisors(s[0], s[1])
        if ks is not None:
            return _result(s, [complete_d7_pair(s[0], s[1], *ks)], complete_expected=False)
        u = complete_d7_by_chance(s[0], s[1])
        if u is not None:
            return _result(s, [u], complete_expected=False)
        return _unsupported(s, Reason.HYPOTHESES_NOT_MET, "no K1, K2 with K1|v, K2|w, K1*K2 = sqrt(N)")
    if d == 8 and n1 == 3:
        ks = _d8_divisors(s)
        if ks is None:
            return _unsupported(s, Reason.HYPOTHESES_NOT_MET, "no K1*K2*K3 = N with Kj | vj")
        return _result(s, [complete_d8_triple(s[0], s[1], s[2], *ks)], complete_expected=False)
    return _unsupported(s, detail=f"d={d}, {n1} given vectors")


def _frame_for(seed: IntVector, width: int) -> list[IntVector]:
    if width == 4:
        return [seed] + left_unit_frame(seed)
    return list(cayley_matrix(seed).rows)


def extend_blocks(
    d: int,
    n: int,
    width: int = 4,
    seed: IntVector | None = None,
    block: int = 0,
) -> OrthoSet:
    """``width`` orthogonal vectors of squared norm ``n`` in Z^d, supported on
    coordinate block number ``block``.

    With ``width=4`` the frame is ``v, iv, jv, kv``; with ``width=8`` it is
    the rows of the Cayley matrix of ``v``.
    """
    if width not in (4, 8):
        raise InvalidInput(f"block width must be 4 or 8, got {width}")
    if d <= 0 or d % width:
        raise InvalidInput(f"dimension {d} is not a multiple of {width}")
    if not 0 <= block < d // width:
        raise InvalidInput(f"block {block} outside 0..{d // width - 1}")
    if seed is None:
        reps = enumerate_reps(n, width, budget=max(n, 0))
        if not reps:
            raise InvalidInput(f"{n} is not a sum of {width} squares")
        seed = IntVector(reps[0])
    if seed.dim != width or seed.norm2 != n:
        raise InvalidInput(f"seed {seed} is not a {width}-vector of squared norm {n}")
    return verify_ortho_set(_place(_frame_for(seed, width), d, block * width))


def _place(frame: list[IntVector], d: int, off: int) -> list[IntVector]:
    out = []
    for f in frame:
        coords = [0] * d
        coords[off : off + f.dim] = f.coords
        out.append(IntVector(coords))
    return out


def obstruction_d4kplus2(d: int, n: int) -> OrthoSet | None:
    """Blocking set of ``d-2`` vectors for ``d = 4k+2``.

    Returns ``None`` when ``n`` is a sum of two squares, since the
    construction then certifies nothing.
    """
    if d < 6 or d % 4 != 2:
        raise InvalidInput(f"dimension {d} is not of the form 4k+2 with k >= 1")
    if n <= 0:
        raise InvalidInput("squared norm must be positive")
    if sum_two_squares(n):
        return None
    seed = IntVector(enumerate_reps(n, 4, budget=n)[0])
    vectors: list[IntVector] = []
    for b in range((d - 2) // 4):
        vectors.extend(_place(_frame_for(seed, 4), d, 4 * b))
    return verify_ortho_set(vectors)
