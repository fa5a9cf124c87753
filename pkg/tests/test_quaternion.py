import itertools
import random
from math import gcd, isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orthoext.errors import NotPerfectSquareNorm, NotPrimitive
from orthoext.intvec import IntVector, vec, verify_ortho_set
from orthoext.quaternion import (
    ONE,
    QI,
    QJ,
    QK,
    UNITS,
    PureUnit,
    Quaternion,
    cycle,
    cycle_inv,
    dot_cross,
    embed_vec3,
    pythagorean_param,
    quat_bezout,
    quat_mul,
    rotate_vec,
    sandwich,
    unit_frame,
)

coef = st.integers(-60, 60)
quats = st.builds(Quaternion, coef, coef, coef, coef)


def brute_param(a):
    """First (q, u) in the documented order: a0 descending, a1..a3 ascending,
    then units i, j, k."""
    n = isqrt(a.norm2)
    r = isqrt(n)
    target = embed_vec3(a)
    for a0 in range(r, -r - 1, -1):
        for a1, a2, a3 in itertools.product(range(-r, r + 1), repeat=3):
            q = Quaternion(a0, a1, a2, a3)
            if q.norm2 != n:
                continue
            for u in UNITS:
                if sandwich(q, u.quaternion) == target:
                    return q, u
    return None


def primitive_square_vectors(limit):
    for n in range(1, limit + 1):
        for t in itertools.product(range(-n, n + 1), repeat=2):
            c2 = n * n - t[0] ** 2 - t[1] ** 2
            if c2 < 0:
                continue
            c = isqrt(c2)
            if c * c != c2:
                continue
            for z in {c, -c}:
                if gcd(t[0], t[1], z) == 1:
                    yield IntVector((t[0], t[1], z))


def test_hamilton_relations():
    assert quat_mul(QI, QJ) == QK
    assert quat_mul(QJ, QI) == -QK
    assert quat_mul(QJ, QK) == QI
    assert quat_mul(QK, QI) == QJ
    for u in (QI, QJ, QK):
        assert quat_mul(u, u) == -ONE
    assert quat_mul(quat_mul(QI, QJ), QK) == -ONE
    q = Quaternion(3, -1, 4, 1)
    assert quat_mul(q, ONE) == q == quat_mul(ONE, q)


def test_embed():
    assert embed_vec3(vec(1, 0, 0)) == QI
    assert embed_vec3(vec(2, 3, 6)) == Quaternion(0, 2, 3, 6)
    assert embed_vec3(vec(0, 0, 0)).is_zero()


@pytest.mark.parametrize(
    "a, b, d, c",
    [
        ((1, 0, 0), (0, 1, 0), 0, (0, 0, 1)),
        ((1, 2, 3), (1, 2, 3), 14, (0, 0, 0)),
        ((2, 3, 6), (3, -6, 2), 0, (42, 14, -21)),
    ],
)
def test_dot_cross(a, b, d, c):
    assert dot_cross(IntVector(a), IntVector(b)) == (d, IntVector(c))


@given(quats, quats, quats)
def test_associative_and_norm_multiplicative(p, q, r):
    assert quat_mul(quat_mul(p, q), r) == quat_mul(p, quat_mul(q, r))
    assert quat_mul(p, q).norm2 == p.norm2 * q.norm2
    assert quat_mul(p, q).conj() == quat_mul(q.conj(), p.conj())
    assert quat_mul(p, p.conj()) == Quaternion(p.norm2)


def test_rotate_vec():
    assert rotate_vec(ONE, vec(5, -2, 7)) == vec(5, -2, 7)
    assert rotate_vec(QI, vec(0, 1, 0)) == vec(0, -1, 0)


@given(quats, st.tuples(coef, coef, coef))
def test_rotation_scales_norm(q, a):
    a = IntVector(a)
    assert rotate_vec(q, a).norm2 == q.norm2**2 * a.norm2


def test_unit_frame_examples():
    assert unit_frame(ONE).vectors == (vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1))
    s = unit_frame(Quaternion(1, 1, 1, 1))
    assert s.squared_norm == 16 and len(s) == 3


@given(quats)
def test_unit_frame_is_orthogonal(q):
    if q.is_zero():
        return
    assert unit_frame(q).squared_norm == q.norm2**2


def test_pythagorean_param_examples():
    assert pythagorean_param(vec(1, 0, 0)) == (ONE, PureUnit.I)
    q, u = pythagorean_param(vec(2, 3, 6))
    assert q.norm2 == 7 and sandwich(q, u.quaternion) == Quaternion(0, 2, 3, 6)
    with pytest.raises(NotPerfectSquareNorm):
        pythagorean_param(vec(1, 4, 10))
    with pytest.raises(NotPrimitive):
        pythagorean_param(vec(0, 0, 3))


def test_pythagorean_param_matches_brute_force():
    seen = 0
    for a in primitive_square_vectors(9):
        assert pythagorean_param(a) == brute_param(a), a
        seen += 1
    assert seen > 100


def test_pythagorean_param_exhaustive_small():
    for a in primitive_square_vectors(40):
        q, u = pythagorean_param(a)
        assert q.norm2 ** 2 == a.norm2
        assert sandwich(q, u.quaternion) == embed_vec3(a)
        frame = unit_frame(q)
        assert frame[u.index] == a
        assert frame.squared_norm == a.norm2


def test_cycle_is_an_automorphism():
    assert cycle(QI) == QJ and cycle(QJ) == QK and cycle(QK) == QI
    rng = random.Random(3)
    for _ in range(300):
        p = Quaternion(*(rng.randint(-20, 20) for _ in range(4)))
        q = Quaternion(*(rng.randint(-20, 20) for _ in range(4)))
        assert cycle(quat_mul(p, q)) == quat_mul(cycle(p), cycle(q))
        assert cycle_inv(cycle(p)) == p
        assert cycle(p).conj() == cycle(p.conj())


def bezout_holds(q, u, q1, q2):
    return quat_mul(q1, q) + quat_mul(quat_mul(q2, q), u.quaternion) == Quaternion(2)


def test_bezout_examples():
    q1, q2 = quat_bezout(ONE, PureUnit.I)
    assert (q1, q2) == (ONE, -QI)
    q = Quaternion(2, 1, 0, 0)
    for u in UNITS:
        if sandwich(q, u.quaternion).content() == 1:
            assert bezout_holds(q, u, *quat_bezout(q, u))


def test_bezout_rejects_non_primitive_image():
    # 1+i+j+k sends i to 4j
    q = Quaternion(1, 1, 1, 1)
    assert sandwich(q, QI) == Quaternion(0, 0, 4, 0)
    with pytest.raises(NotPrimitive):
        quat_bezout(q, PureUnit.I)


def test_bezout_random():
    rng = random.Random(11)
    done = 0
    while done < 300:
        q = Quaternion(*(rng.randint(-30, 30) for _ in range(4)))
        u = rng.choice(UNITS)
        image = sandwich(q, u.quaternion)
        if q.is_zero() or image.content() != 1:
            with pytest.raises(NotPrimitive):
                quat_bezout(q, u)
            continue
        assert bezout_holds(q, u, *quat_bezout(q, u))
        done += 1


def test_frame_vectors_are_orthogonal_to_each_other():
    for q in [Quaternion(1, 2, 3, 4), Quaternion(0, 5, -2, 1), Quaternion(7, 0, 0, 1)]:
        verify_ortho_set(list(unit_frame(q)))
