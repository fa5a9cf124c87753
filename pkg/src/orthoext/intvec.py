"""Exact integer vectors and matrices.

Every arithmetic result is range-checked against signed 64-bit integers;
leaving that range raises :class:`~orthoext.errors.IntegerOverflow`
instead of silently growing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DimensionMismatch,
    InvalidInput,
    NormMismatch,
    NotOrthogonal,
    checked,
    checked_wide,
)


@dataclass(frozen=True)
class IntVector:
    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        cs = tuple(coords)
        if not cs:
            raise InvalidInput("a vector needs at least one coordinate")
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidInput(f"non-integer coordinate {c!r}")
            checked(c)
        object.__setattr__(self, "coords", cs)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self) -> str:
        return f"IntVector({list(self.coords)})"

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coords)

    def _same_dim(self, other: IntVector) -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other: IntVector) -> IntVector:
        self._same_dim(other)
        return IntVector(checked(a + b) for a, b in zip(self, other))

    def __sub__(self, other: IntVector) -> IntVector:
        self._same_dim(other)
        return IntVector(checked(a - b) for a, b in zip(self, other))

    def __neg__(self) -> IntVector:
        return IntVector(checked(-a) for a in self)

    def scale(self, k: int) -> IntVector:
        return IntVector(checked(k * a) for a in self)

    def exact_div(self, k: int) -> IntVector:
        """Divide every coordinate by ``k``; raise if any division is inexact."""
        if k == 0:
            raise ZeroDivisionError("division of a vector by zero")
        out = []
        for a in self:
            q, r = divmod(a, k)
            if r:
                raise InvalidInput(f"{k} does not divide coordinate {a}")
            out.append(q)
        return IntVector(out)

    @property
    def norm2(self) -> int:
        return dot(self, self)

    def is_zero(self) -> bool:
        return not any(self.coords)


def vec(*coords: int) -> IntVector:
    """Shorthand constructor: ``vec(1, 2, 3)``."""
    if len(coords) == 1 and not isinstance(coords[0], int):
        return IntVector(coords[0])
    return IntVector(coords)


def dot(u: IntVector, v: IntVector) -> int:
    if u.dim != v.dim:
        raise DimensionMismatch(f"dot of dimensions {u.dim} and {v.dim}")
    acc = 0
    for a, b in zip(u.coords, v.coords):
        acc = checked(acc + checked(a * b))
    return acc


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[IntVector, ...]

    def __init__(self, rows: Iterable[IntVector | Iterable[int]]):
        rs = tuple(r if isinstance(r, IntVector) else IntVector(r) for r in rows)
        if not rs:
            raise InvalidInput("a matrix needs at least one row")
        if len({r.dim for r in rs}) != 1:
            raise DimensionMismatch("matrix rows have different lengths")
        object.__setattr__(self, "rows", rs)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.rows[0].dim

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].coords[j]

    def column(self, j: int) -> IntVector:
        return IntVector(r.coords[j] for r in self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.column(j) for j in range(self.ncols))

    def apply(self, v: IntVector) -> IntVector:
        """Matrix times column vector."""
        return IntVector(dot(r, v) for r in self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r.coords) for r in self.rows]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.nrows}x{a.ncols} by {b.nrows}x{b.ncols}")
    cols = b.transpose().rows
    return IntMatrix([dot(r, c) for c in cols] for r in a.rows)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every stored entry is a minor of ``m`` and is held to 64 bits; only the
    product formed inside one elimination step is allowed 128 bits.
    """
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatch(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # the cross product is double width; the quotient is a minor
                # of m and must fit in 64 bits again (Sylvester's identity
                # makes the division exact)
                num = checked_wide(a[i][j] * a[k][k] - a[i][k] * a[k][j])
                a[i][j] = checked(num // prev)
        prev = a[k][k]
    return checked(sign * a[n - 1][n - 1])


def delete_column(m: IntMatrix, j: int) -> IntMatrix:
    """Drop column ``j`` (1-based) from ``m``."""
    if not 1 <= j <= m.ncols:
        raise InvalidInput(f"column index {j} outside 1..{m.ncols}")
    if m.ncols == 1:
        raise InvalidInput("cannot delete the only column")
    return IntMatrix(r.coords[: j - 1] + r.coords[j:] for r in m.rows)


@dataclass(frozen=True)
class OrthoSet:
    """Pairwise orthogonal integer vectors sharing one squared norm.

    Build these through :func:`verify_ortho_set`; the constructor trusts
    its arguments.
    """

    vectors: tuple[IntVector, ...]
    squared_norm: int

    @property
    def dim(self) -> int:
        return self.vectors[0].dim

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[IntVector]:
        return iter(self.vectors)

    def __getitem__(self, i: int) -> IntVector:
        return self.vectors[i]

    def as_matrix(self) -> IntMatrix:
        return IntMatrix(self.vectors)

    def is_complete(self) -> bool:
        return len(self.vectors) == self.dim


def verify_ortho_set(vectors: Sequence[IntVector]) -> OrthoSet:
    vs = tuple(v if isinstance(v, IntVector) else IntVector(v) for v in vectors)
    if not vs:
        raise InvalidInput("an orthogonal set needs at least one vector")
    d = vs[0].dim
    for v in vs:
        if v.dim != d:
            raise DimensionMismatch(f"mixed dimensions {d} and {v.dim}")
    if len(vs) > d:
        raise InvalidInput(f"{len(vs)} vectors cannot be orthogonal in dimension {d}")
    n = vs[0].norm2
    for i, v in enumerate(vs):
        if v.norm2 != n:
            raise NormMismatch(i, v.norm2, n)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            p = dot(vs[i], vs[j])
            if p:
                raise NotOrthogonal(i, j, p)
    return OrthoSet(vs, n)


def gram(vectors: Sequence[IntVector]) -> list[list[int]]:
    return [[dot(u, v) for v in vectors] for u in vectors]


def canonicalize_signed_perm(v: IntVector) -> IntVector:
    return IntVector(sorted(abs(c) for c in v))


def parse_vectors(text: str, source: str = "<input>") -> list[IntVector]:
    """Parse the whitespace separated vector text format.

    Blank lines and lines starting with ``#`` are skipped; every remaining
    line must hold the same number of integers.
    """
    out: list[IntVector] = []
    arity = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            coords = [int(tok) for tok in s.split()]
        except ValueError:
            raise InvalidInput(f"{source}:{lineno}: non-integer token in {s!r}") from None
        if arity is None:
            arity = len(coords)
        elif len(coords) != arity:
            raise InvalidInput(
                f"{source}:{lineno}: expected {arity} integers, found {len(coords)}"
            )
        out.append(IntVector(coords))
    if not out:
        raise InvalidInput(f"{source}: no vectors found")
    return out


def format_vectors(vectors: Iterable[IntVector]) -> str:
    return "".join(str(v) + "\n" for v in vectors)
