"""The even Clifford subalgebra over even-weight bit vectors.

A bit vector ``(v_1, ..., v_n)`` is stored as an ``int`` whose most
significant of ``n`` bits is ``v_1``.  Basis elements ``e_a`` are ordered by
that integer value, and this ordering is the coordinate order of
:func:`phi`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, InternalFailure, InvalidInput, checked
from .intvec import IntVector, OrthoSet, verify_ortho_set

MIN_SEARCH_N = 3
MAX_SEARCH_N = 12


@dataclass(frozen=True, order=True)
class BitVec:
    bits: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("bit vector length must be positive")
        if not 0 <= self.bits < (1 << self.n):
            raise InvalidInput(f"{self.bits} does not fit in {self.n} bits")

    @classmethod
    def from_tuple(cls, t: Sequence[int]) -> BitVec:
        b = 0
        for x in t:
            if x not in (0, 1):
                raise InvalidInput(f"bit vector entries must be 0/1, got {x}")
            b = (b << 1) | x
        return cls(b, len(t))

    @classmethod
    def parse(cls, s: str) -> BitVec:
        """``"00101"`` -> BitVec with v_3 = v_5 = 1."""
        return cls.from_tuple([int(ch) for ch in s.strip()])

    def to_tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> (self.n - 1 - j)) & 1 for j in range(self.n))

    @property
    def weight(self) -> int:
        return bin(self.bits).count("1")

    def is_even(self) -> bool:
        return self.weight % 2 == 0

    def __add__(self, other: BitVec) -> BitVec:
        _same_n(self, other)
        return BitVec(self.bits ^ other.bits, self.n)

    def dot(self, other: BitVec) -> int:
        _same_n(self, other)
        return bin(self.bits & other.bits).count("1") % 2

    def __str__(self) -> str:
        return "".join(map(str, self.to_tuple()))


def _same_n(a: BitVec, b: BitVec) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"bit vectors of lengths {a.n} and {b.n}")


def even_space(n: int) -> list[BitVec]:
    """All even-weight bit vectors of length ``n`` in basis order."""
    return [BitVec(b, n) for b in range(1 << n) if bin(b).count("1") % 2 == 0]


def s_parity(v: BitVec) -> int:
    if not v.is_even():
        raise InvalidInput(f"{v} has odd weight")
    return (v.weight // 2) % 2


def _s_exponent(a: BitVec, b: BitVec) -> int:
    # sum over j, k <= j of a_j b_k, mod 2
    ta, tb = a.to_tuple(), b.to_tuple()
    acc = 0
    prefix = 0
    for j in range(a.n):
        prefix ^= tb[j]
        acc ^= ta[j] & prefix
    return acc


def sign_S(a: BitVec, b: BitVec) -> int:
    _same_n(a, b)
    return -1 if _s_exponent(a, b) else 1


@dataclass(frozen=True)
class CliffordElement:
    n: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, c in dict(self.coeffs).items():
            bits = k.bits if isinstance(k, BitVec) else k
            if isinstance(k, BitVec) and k.n != self.n:
                raise DimensionMismatch(f"key {k} has length {k.n}, expected {self.n}")
            if not 0 <= bits < (1 << self.n) or bin(bits).count("1") % 2:
                raise InvalidInput(f"basis index {bits:0{self.n}b} is not an even-weight vector")
            if c:
                clean[bits] = clean.get(bits, 0) + checked(c)
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def basis(cls, v: BitVec) -> CliffordElement:
        return cls(v.n, {v.bits: 1})

    @classmethod
    def from_coords(cls, n: int, coords: Sequence[int]) -> CliffordElement:
        basis = even_space(n)
        if len(coords) != len(basis):
            raise DimensionMismatch(f"need {len(basis)} coordinates for n={n}, got {len(coords)}")
        return cls(n, {b.bits: c for b, c in zip(basis, coords)})

    def coord(self, v: BitVec) -> int:
        return self.coeffs.get(v.bits, 0)

    def __mul__(self, other: CliffordElement) -> CliffordElement:
        return clifford_mul(self, other)

    @property
    def norm2(self) -> int:
        return sum(c * c for c in self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs


def clifford_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    if x.n != y.n:
        raise DimensionMismatch(f"elements of E_{x.n} and E_{y.n}")
    n = x.n
    out: dict[int, int] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            s = sign_S(BitVec(a, n), BitVec(b, n))
            k = a ^ b
            out[k] = checked(out.get(k, 0) + checked(s * checked(ca * cb)))
    return CliffordElement(n, out)


def phi(e: CliffordElement) -> IntVector:
    """Coordinates of ``e`` in basis order (length ``2**(n-1)``)."""
    return IntVector(e.coeffs.get(b.bits, 0) for b in even_space(e.n))


def v0_condition(u: BitVec, v: BitVec) -> bool:
    """``s(u) + s(v) + u.v`` is odd."""
    _same_n(u, v)
    if u == v:
        raise InvalidInput(f"the condition compares distinct vectors, got {u} twice")
    return (s_parity(u) + s_parity(v) + u.dot(v)) % 2 == 1


def check_v0(V0: Iterable[BitVec]) -> list[BitVec]:
    vs = list(V0)
    if not vs:
        raise InvalidInput("V0 is empty")
    if len(set(vs)) != len(vs):
        raise InvalidInput("V0 contains repeated vectors")
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if not v0_condition(vs[i], vs[j]):
                raise InvalidInput(f"pair ({vs[i]}, {vs[j]}) violates the V0 parity condition")
    return vs


def orthogonal_family(e: CliffordElement, V0: Iterable[BitVec], side: str = "right") -> OrthoSet:
    """Coordinate vectors of ``e * e_v`` (``side="right"``) or ``e_v * e``
    (``side="left"``) for ``v`` in ``V0``, in the order given."""
    vs = check_v0(V0)
    if e.is_zero():
        raise InvalidInput("orthogonal_family of the zero element")
    for v in vs:
        if v.n != e.n:
            raise DimensionMismatch(f"{v} has length {v.n}, element lives in E_{e.n}")
    if side == "right":
        prods = [clifford_mul(e, CliffordElement.basis(v)) for v in vs]
    elif side == "left":
        prods = [clifford_mul(CliffordElement.basis(v), e) for v in vs]
    else:
        raise InvalidInput(f"side must be 'left' or 'right', got {side!r}")
    return verify_ortho_set([phi(p) for p in prods])


def v0_graph(n: int) -> tuple[list[int], dict[int, int]]:
    """Vertices (even-weight ints) and adjacency bitmasks over vertex positions."""
    verts = [b.bits for b in even_space(n)]
    sp = [(bin(b).count("1") // 2) % 2 for b in verts]
    adj = {}
    for i, a in enumerate(verts):
        mask = 0
        for j, b in enumerate(verts):
            if i != j and (sp[i] + sp[j] + bin(a & b).count("1")) % 2 == 1:
                mask |= 1 << j
        adj[i] = mask
    return verts, adj


def _color_bound(cand: int, adj: dict[int, int]) -> int:
    # greedy colouring: number of colours bounds the clique size within cand
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            rest &= ~low
            avail &= ~low & ~adj[v]
    return colors


def max_clique(adj: dict[int, int], cand: int, target: int | None = None) -> list[int]:
    """Lexicographically smallest maximum clique inside the vertex mask ``cand``.

    Depth-first in ascending vertex order; a branch is cut only when it cannot
    beat the best size strictly, so the first maximum clique reached is the
    lexicographically smallest.  With ``target`` (a known clique number) the
    search stops at the first clique of that size.
    """
    best: list[int] = []
    need = 0 if target is None else target

    def expand(clique: list[int], cand: int) -> bool:
        nonlocal best
        if not cand:
            if len(clique) > len(best) and len(clique) >= need:
                best = clique[:]
                return target is not None
            return False
        floor = max(len(best), need - 1)
        if len(clique) + _color_bound(cand, adj) <= floor:
            return False
        while cand:
            if len(clique) + bin(cand).count("1") <= floor:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            clique.append(v)
            done = expand(clique, cand & adj[v])
            clique.pop()
            if done:
                return True
            floor = max(len(best), need - 1)
        return False

    expand([], cand)
    return best


def max_v0_size(n: int) -> int:
    """Clique number of the V0 graph.

    Translations act transitively on vertices and coordinate permutations fix
    the zero vector, so a maximum clique may be assumed to contain ``0`` and
    ``r``, the weight-``w`` vector on the last ``w`` coordinates.  Permutations
    inside those ``w`` coordinates and inside the remaining ``n - w`` fix both;
    a third vertex is then determined up to symmetry by how many of its ones
    fall in each group.
    """
    verts, adj = v0_graph(n)
    pos = {b: i for i, b in enumerate(verts)}
    best = 2
    for w in range(2, n + 1, 4):
        r = pos[(1 << w) - 1]
        common = adj[0] & adj[r]
        for inside in range(w + 1):
            for outside in range(n - w + 1):
                t_bits = ((1 << inside) - 1) | (((1 << outside) - 1) << w)
                t = pos.get(t_bits)
                if t is None or not (common >> t) & 1:
                    continue
                best = max(best, 3 + len(max_clique(adj, common & adj[t])))
    return best


def search_max_v0(n: int) -> list[BitVec]:
    """A maximum-cardinality valid V0 for length ``n``, lexicographically
    smallest among all maximum ones."""
    if not MIN_SEARCH_N <= n <= MAX_SEARCH_N:
        raise InvalidInput(f"n={n} outside the supported range {MIN_SEARCH_N}..{MAX_SEARCH_N}")
    size = max_v0_size(n)
    verts, adj = v0_graph(n)
    # some maximum clique contains 0 (translation), and 0 is the smallest vertex
    rest = max_clique(adj, adj[0], target=size - 1)
    if len(rest) != size - 1:
        raise InternalFailure(f"no clique of size {size} through the zero vector")
    return [BitVec(verts[i], n) for i in [0] + rest]


def search_max_v0_plain(n: int) -> list[BitVec]:
    """Same answer as :func:`search_max_v0` without the translation shortcut."""
    if not MIN_SEARCH_N <= n <= MAX_SEARCH_N:
        raise InvalidInput(f"n={n} outside the supported range {MIN_SEARCH_N}..{MAX_SEARCH_N}")
    verts, adj = v0_graph(n)
    clique = max_clique(adj, (1 << len(verts)) - 1)
    return [BitVec(verts[i], n) for i in clique]
