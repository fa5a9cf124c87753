import random

import pytest

from orthoext.intvec import IntVector
from orthoext.octonion import cayley_matrix
from orthoext.quaternion import ONE, QI, QJ, QK, Quaternion, quat_mul


def rand_quat(rng, lo=-9, hi=9):
    while True:
        q = Quaternion(*(rng.randint(lo, hi) for _ in range(4)))
        if not q.is_zero():
            return q


def signed_perm(rng, d):
    perm = list(range(d))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(d)]

    def apply(v):
        return IntVector(signs[i] * v[perm[i]] for i in range(d))

    return apply


def quat_frame4(rng, lo=-6, hi=6):
    """Four orthogonal equal-norm vectors p*x*r, x in {1, i, j, k}, coordinates
    mixed by a random signed permutation."""
    p, r = rand_quat(rng, lo, hi), rand_quat(rng, lo, hi)
    mix = signed_perm(rng, 4)
    vs = [quat_mul(quat_mul(p, x), r).to_vector() for x in (ONE, QI, QJ, QK)]
    rng.shuffle(vs)
    return [mix(v) for v in vs]


def cayley_frame8(rng, lo=-4, hi=4):
    """Rows of C(x) C(y): eight orthogonal vectors of squared norm |x|^2 |y|^2."""
    while True:
        x = [rng.randint(lo, hi) for _ in range(8)]
        y = [rng.randint(lo, hi) for _ in range(8)]
        if any(x) and any(y):
            break
    cx, cy = cayley_matrix(x), cayley_matrix(y)
    cols = cy.transpose().rows
    rows = [IntVector(sum(a * b for a, b in zip(r, c)) for c in cols) for r in cx.rows]
    mix = signed_perm(rng, 8)
    rng.shuffle(rows)
    return [mix(v) for v in rows]


@pytest.fixture
def rng():
    return random.Random(20261017)


def _pair_frame(a, b):
    return [IntVector((a, b)), IntVector((-b, a))]


def _seed_frame4(rng, n):
    from orthoext.completion import left_unit_frame
    from orthoext.squares import enumerate_reps

    seed = IntVector(rng.choice(enumerate_reps(n, 4, budget=n)))
    seed = signed_perm(rng, 4)(seed)
    return [seed] + left_unit_frame(seed)


def _stack(blocks):
    """Block-diagonal union of frames sharing one squared norm."""
    d = sum(b[0].dim for b in blocks)
    out, off = [], 0
    for b in blocks:
        w = b[0].dim
        for v in b:
            c = [0] * d
            c[off : off + w] = v.coords
            out.append(IntVector(c))
        off += w
    return out


def full_frame(rng, d, square=None):
    """An orthogonal equal-norm frame for d in 2..8, coordinates mixed by a
    signed permutation.  Even d gives d vectors; odd d gives d-1 vectors
    (a frame of Z^(d-1) padded with a zero coordinate).

    ``square`` forces the squared norm to be (True) or not be (False) a
    perfect square; ``None`` leaves it to chance.
    """
    from math import isqrt

    while True:
        if d == 4:
            frame = quat_frame4(rng)
        elif d == 8 and rng.random() < 0.5:
            frame = cayley_frame8(rng)
        else:
            a, b = rng.randint(-12, 12), rng.randint(-12, 12)
            n = a * a + b * b
            if n == 0:
                continue
            pair = _pair_frame(a, b)
            if d in (2, 3):
                blocks = [pair]
            elif d in (4, 5):
                blocks = [_seed_frame4(rng, n)]
            elif d in (6, 7):
                blocks = [_seed_frame4(rng, n), pair]
            else:
                blocks = [_seed_frame4(rng, n), _seed_frame4(rng, n)]
            frame = _stack(blocks)
        n = frame[0].norm2
        is_sq = isqrt(n) ** 2 == n
        if square is not None and is_sq != square:
            continue
        if frame[0].dim < d:
            # odd d: the frame fills d-1 coordinates, pad a zero coordinate
            frame = [IntVector(v.coords + (0,)) for v in frame]
        mix = signed_perm(rng, d)
        frame = [mix(v) for v in frame]
        rng.shuffle(frame)
        return frame
