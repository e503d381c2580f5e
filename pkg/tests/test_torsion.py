import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from binarytor import complexes as cx
from binarytor.complexes import binary, chain, delta, shift, tau, top, bot
from binarytor.fabricate import random_acyclic, random_acyclic_binary
from binarytor.matrix import Matrix, det, inverse, random_gl, random_matrix, block_diag
from binarytor.rings import GF, QQ, ZZ
from binarytor.torsion import (NotAcyclic, UnitClass, auto_complex, cls, contraction,
                               diffrot_product, elementary_product_witness, is_contraction,
                               is_elementary, product, rotation_matrix, signed_swap_factors,
                               topbotiso_product, torsion, transport, two_term_to_auto)

from oracles import basis_torsion

F5, F7 = GF(5), GF(7)
seeds = st.integers(0, 10**6)
rings = st.sampled_from([QQ, F5, ZZ])


def M(ring, rows):
    return Matrix.from_rows(ring, rows)


# -- torsion against the basis oracle ------------------------------------------------------------------

@given(rings, seeds)
def test_torsion_matches_basis_oracle(ring, seed):
    c = random_acyclic(ring, seed, max_length=5, max_dim=4)
    assert torsion(c).value == basis_torsion(c)


@given(rings, seeds, seeds)
def test_contraction_strategies_agree(ring, s1, s2):
    c = random_acyclic(ring, s1)
    h = contraction(c, "random", random.Random(s2))
    assert is_contraction(c, h)
    assert torsion(c) == torsion(c, "random", random.Random(s2))


def test_torsion_needs_acyclic():
    with pytest.raises(NotAcyclic):
        torsion(cx.concentrated(QQ, 0, 1))
    with pytest.raises(NotAcyclic):
        torsion(chain(ZZ, 0, (1, 1), [M(ZZ, [[2]])]))


def test_torsion_of_zero_complex_is_one():
    assert torsion(cx.zero_complex(QQ)).is_one()


@pytest.mark.parametrize("ring,d,expected", [
    (QQ, [[2]], 2),                    # d + h runs from odd to even degrees
    (F5, [[3]], 3),
    (ZZ, [[-1]], -1),
])
def test_two_term_torsion(ring, d, expected):
    c = chain(ring, 0, (1, 1), [M(ring, d)])
    assert torsion(c).value == expected == basis_torsion(c)


# -- classes of automorphism complexes -----------------------------------------------------------------

@pytest.mark.parametrize("ring,theta,expected", [
    (QQ, [[2]], 2),
    (F5, [[2]], 2),
    (QQ, [[0, -1], [1, 0]], 1),
    (ZZ, [[0, 1], [1, 0]], -1),
    (QQ, [[1, 2], [3, 4]], -2),
    (F7, [[3, 1], [0, 5]], 1),
])
def test_cls_of_automorphism_is_det(ring, theta, expected):
    assert cls(auto_complex(M(ring, theta))).value == expected


def test_auto_complex_shape():
    theta = M(QQ, [[2, 1], [1, 1]])
    a = auto_complex(theta)
    assert a.support() == [0, 1]
    assert a.diff_top(1) == theta and a.diff_bot(1) == Matrix.identity(QQ, 2)
    assert two_term_to_auto(a) == theta


@given(rings, seeds)
def test_cls_of_automorphism_is_det_random(ring, seed):
    rng = random.Random(seed)
    theta = random_gl(ring, rng.randint(1, 4), rng)
    assert cls(auto_complex(theta)).value == det(theta)


def test_f_over_g_two_term_complex():
    # a binary complex N --f/g--> N has class det f / det g
    f = M(F7, [[2, 1], [0, 3]])
    g = M(F7, [[1, 1], [1, 2]])
    b = binary(F7, 0, (2, 2), [f], [g])
    assert cls(b).value == det(f) * pow(det(g), -1, 7) % 7 == 6


def test_cls_over_zz_is_a_sign():
    for seed in range(30):
        assert cls(random_acyclic_binary(ZZ, seed)).value in (1, -1)


def test_unit_class_arithmetic():
    a, b = UnitClass(QQ, Fraction(2)), UnitClass(QQ, Fraction(3, 4))
    assert (a * b).value == Fraction(3, 2)
    assert (a / b).value == Fraction(8, 3)
    assert (a ** -2).value == Fraction(1, 4)
    assert (a * a.inverse()).is_one()
    assert str(UnitClass(QQ, Fraction(-1, 2))) == "-1/2"


# -- K1 identities -------------------------------------------------------------------------------------

@given(rings, seeds)
def test_cls_of_diagonal_is_one(ring, seed):
    assert cls(delta(random_acyclic(ring, seed))).is_one()


@given(rings, seeds)
def test_cls_is_multiplicative_on_automorphisms(ring, seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    t, p = random_gl(ring, n, rng), random_gl(ring, n, rng)
    assert cls(auto_complex(t @ p)) == cls(auto_complex(t)) * cls(auto_complex(p))


@given(rings, seeds, st.integers(-2, 2))
def test_cls_under_shift(ring, seed, i):
    b = random_acyclic_binary(ring, seed, max_length=4, max_dim=3)
    assert cls(shift(b, i)) == cls(b) ** (-1 if i % 2 else 1)


@given(rings, seeds)
def test_cls_under_tau(ring, seed):
    b = random_acyclic_binary(ring, seed, max_length=4, max_dim=3)
    assert cls(tau(b)) == cls(b).inverse()
    assert (cls(b) * cls(tau(b))).is_one()


@given(rings, seeds)
def test_topbotiso(ring, seed):
    rng = random.Random(seed)
    Mb = random_acyclic_binary(ring, rng, max_length=4, max_dim=3)
    f = {n: random_gl(ring, Mb.dim(n), rng) for n in Mb.degrees}
    g = {n: random_gl(ring, Mb.dim(n), rng) for n in Mb.degrees}
    N = transport(Mb, f, g)
    assert cx.validate(N) == []
    assert cls(N) / cls(Mb) == topbotiso_product(ring, f, g)


def test_topbotiso_example():
    # identical transports on both sides leave the class unchanged
    Mb = random_acyclic_binary(QQ, 3, max_length=3, max_dim=2)
    f = {n: random_gl(QQ, Mb.dim(n), random.Random(n)) for n in Mb.degrees}
    N = transport(Mb, f, f)
    assert cls(N) == cls(Mb)
    assert topbotiso_product(QQ, f, f).is_one()


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("ring", [QQ, F5, ZZ])
def test_diffrot(ring, n):
    rng = random.Random(f"{ring.name}{n}")
    c = random_acyclic(ring, rng, max_length=4, max_dim=3)
    diffs = []
    for _ in range(n):
        gl = {m: random_gl(ring, c.dim(m), rng) for m in c.degrees}
        diffs.append([gl[m - 1] @ c.diff(m) @ inverse(gl[m]) for m in range(c.lo + 1, c.hi + 1)])
    for perm in ([*range(1, n), 0], list(reversed(range(n)))):
        assert diffrot_product(c.lo, c.dims, diffs, perm, ring).is_one()


# -- elementary matrices ----------------------------------------------------------------------------

def test_two_by_two_signed_swap_factors():
    for ring in (QQ, F5, ZZ):
        fs = [e.matrix() for e in signed_swap_factors(ring, 1, 2, 0, 1)]
        assert [f.tolist() for f in fs] == [[[1, 0], [1, 1]], [[1, -1 % ring.p if ring.kind == "F" else -1],
                                                                   [0, 1]], [[1, 0], [1, 1]]]
        assert fs[0] @ fs[1] @ fs[2] == M(ring, [[0, -1], [1, 0]])


@pytest.mark.parametrize("theta,split,expected", [
    ([[1, 5], [0, 1]], 1, True),
    ([[1, 0], [5, 1]], 1, False),
    ([[2, 5], [0, 1]], 1, False),
    ([[1, 0, 3], [0, 1, 4], [0, 0, 1]], 2, True),
    ([[1, 0, 3], [0, 1, 4], [0, 0, 1]], 1, False),
])
def test_is_elementary(theta, split, expected):
    assert is_elementary(M(QQ, theta), split) is expected


def test_rotation_of_two_blocks():
    assert rotation_matrix([1, 1], QQ) == M(QQ, [[0, -1], [1, 0]])


@pytest.mark.parametrize("blocks", [[1], [2, 2], [1, 1, 1], [2, 2, 2, 2]])
def test_rotation_matrix_properties(blocks):
    S = rotation_matrix(blocks, ZZ)
    assert det(S) == 1
    assert product(ZZ, S.rows, elementary_product_witness(S)) == S
    assert all(abs(x) <= 1 for row in S.tolist() for x in row)


@given(st.sampled_from([QQ, F5, ZZ]), seeds)
def test_rotation_intertwines_block_sums(ring, seed):
    rng = random.Random(seed)
    n, r, c = rng.randint(1, 4), rng.randint(1, 3), rng.randint(1, 3)
    ds = [random_matrix(ring, r, c, rng) for _ in range(n)]
    S_out, S_in = rotation_matrix([r] * n, ring), rotation_matrix([c] * n, ring)
    assert S_out @ block_diag(ring, ds) == block_diag(ring, ds[1:] + ds[:1]) @ S_in


@given(st.sampled_from([QQ, F5]), seeds)
def test_elementary_products_have_trivial_class(ring, seed):
    from binarytor.suites import random_elementary_product
    rng = random.Random(seed)
    E = random_elementary_product(ring, rng.randint(1, 4), rng)
    assert cls(auto_complex(E)).is_one()
