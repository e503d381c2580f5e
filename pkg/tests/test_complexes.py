import random

import pytest
from hypothesis import given, strategies as st

from binarytor import complexes as cx
from binarytor.complexes import (BinaryComplex, ChainComplex, ChainMap, ComplexOfComplexes,
                                 InvalidComplex, NotAChainMap, binary, chain, delta, top, bot, tau)
from binarytor.fabricate import random_acyclic, random_acyclic_binary, random_complex
from binarytor.matrix import Matrix, random_gl, random_matrix
from binarytor.rings import GF, QQ, ZZ
from binarytor.torsion import auto_complex

F5 = GF(5)
seeds = st.integers(0, 10**6)
rings = st.sampled_from([QQ, F5, ZZ])


def M(ring, rows):
    return Matrix.from_rows(ring, rows)


def I(ring, n):
    return Matrix.identity(ring, n)


def two_term(ring, d, lo=0):
    n = d.rows
    return chain(ring, lo, (n, n), [d])


# -- validation and acyclicity -----------------------------------------------------------

def test_validate_examples():
    assert cx.validate(cx.zero_complex(QQ)) == []
    assert cx.validate(two_term(QQ, I(QQ, 2))) == []
    bad = chain(QQ, 0, (1, 1, 1), [M(QQ, [[1]]), M(QQ, [[1]])])
    assert cx.validate(bad) != []
    with pytest.raises(InvalidComplex):
        cx.is_acyclic(bad)


def test_shapes_are_enforced():
    with pytest.raises(InvalidComplex):
        chain(QQ, 0, (1, 2), [Matrix.zeros(QQ, 2, 1)])


@pytest.mark.parametrize("c,expected", [
    (two_term(QQ, I(QQ, 3)), True),
    (cx.concentrated(QQ, 0, 2), False),
    (two_term(ZZ, M(ZZ, [[2]])), False),   # cokernel Z/2
    (two_term(QQ, M(QQ, [[2]])), True),
    (two_term(F5, M(F5, [[5]])), False),
    (cx.zero_complex(ZZ), True),
])
def test_is_acyclic_examples(c, expected):
    assert cx.is_acyclic(c) is expected


def test_integer_acyclicity_sees_torsion_in_the_middle():
    # 0 -> Z -(1,2)^T-> Z^2 -(2,-1)-> Z -> 0 is exact over Q; over Z the cokernel of d_2 is free
    c = chain(ZZ, 0, (1, 2, 1), [M(ZZ, [[2, -1]]), M(ZZ, [[1], [2]])])
    assert cx.is_acyclic(c)
    c = chain(ZZ, 0, (1, 2, 1), [M(ZZ, [[2, -2]]), M(ZZ, [[1], [1]])])
    assert not cx.is_acyclic(c)            # image of d_1 is 2Z
    assert cx.is_acyclic(cx.chain(QQ, 0, (1, 2, 1), [M(QQ, [[2, -2]]), M(QQ, [[1], [1]])]))


# -- shift, sums, functors ------------------------------------------------------------------

def test_shift_examples():
    c = random_acyclic(QQ, 3)
    assert cx.shift(c, 0) is c
    assert cx.same_complex(cx.shift(cx.shift(c, 1), -1), c)
    theta = M(QQ, [[2, 1], [1, 1]])
    s = cx.shift(auto_complex(theta), -1)
    assert s.support() == [1, 2]
    a = cx.shift(auto_complex(theta), 1)
    assert a.support() == [-1, 0] and a.diff_top(0) == -theta


@given(rings, seeds, st.integers(-3, 3))
def test_shift_preserves_acyclicity(ring, seed, i):
    c = random_complex(ring, seed)
    assert cx.is_acyclic(cx.shift(c, i)) == cx.is_acyclic(c)
    assert cx.euler_char(cx.shift(c, i)) == (-1) ** (i % 2) * cx.euler_char(c)


def test_direct_sum_examples():
    a = random_acyclic(QQ, 5)
    assert cx.direct_sum(a, cx.zero_complex(QQ)) is a
    b = cx.concentrated(QQ, 1, 2)
    s = cx.direct_sum(a, b)
    assert all(s.dim(n) == a.dim(n) + b.dim(n) for n in range(-4, 8))
    with pytest.raises(cx.RingMismatch):
        cx.direct_sum(a, cx.concentrated(F5, 0, 1))


@given(rings, seeds, seeds)
def test_direct_sum_acyclic_iff_both(ring, s1, s2):
    a, b = random_complex(ring, s1), random_complex(ring, s2)
    assert cx.is_acyclic(cx.direct_sum(a, b)) == (cx.is_acyclic(a) and cx.is_acyclic(b))


@given(rings, seeds)
def test_binary_functors(ring, seed):
    b = random_acyclic_binary(ring, seed)
    c = top(b)
    assert top(delta(c)) == c and bot(delta(c)) == c
    assert tau(tau(b)) == b
    assert top(tau(b)) == bot(b) and bot(tau(b)) == top(b)
    assert cx.gr(b) == cx.GradedObject(ring, b.lo, b.dims)
    assert cx.is_diagonal(delta(c))


def test_is_diagonal_examples():
    assert not cx.is_diagonal(auto_complex(M(QQ, [[2]])))
    assert cx.is_diagonal(auto_complex(I(QQ, 2)))
    assert cx.is_diagonal(BinaryComplex(QQ, 0, ()))


# -- cones ------------------------------------------------------------------------------------

def test_cone_of_identity():
    V = cx.concentrated(QQ, 0, 2)
    c = cx.mapping_cone(cx.identity_map(V))
    assert c.support() == [0, 1]
    assert c.diff(1) == I(QQ, 2)
    assert cx.is_acyclic(c)


def test_cone_of_zero_map():
    c = random_complex(QQ, 11)
    z = cx.zero_complex(QQ)
    cone = cx.mapping_cone(cx.zero_map(z, c))
    assert cx.same_complex(cone, c)


def test_cone_needs_a_chain_map():
    c = two_term(QQ, I(QQ, 1))
    f = ChainMap(c, c, {0: I(QQ, 1)})     # zero in degree 1: does not commute
    with pytest.raises(NotAChainMap):
        cx.mapping_cone(f)


def test_quasi_iso_examples():
    a = random_acyclic(QQ, 2)
    assert cx.is_quasi_iso(cx.identity_map(a))
    assert cx.is_quasi_iso(cx.zero_map(cx.zero_complex(QQ), a))
    assert not cx.is_quasi_iso(cx.zero_map(cx.zero_complex(QQ), cx.concentrated(QQ, 0, 1)))


def test_inclusion_into_sum_with_acyclic_is_quasi_iso():
    # the two complexes have the same homology; the inclusion of the first summand realizes it
    V = cx.concentrated(QQ, 0, 2)
    A = random_acyclic(QQ, 4, lo=0)
    S = cx.direct_sum(V, A)
    f = ChainMap(V, S, {0: Matrix.from_rows(QQ, [[1, 0], [0, 1]] + [[0, 0]] * A.dim(0))})
    assert cx.is_chain_map(f) and cx.is_quasi_iso(f)
    assert cx.is_acyclic(cx.mapping_cone(f))


def _chain_map(ring, rng, c, d):
    """d h + h d + lam, a chain endomorphism of c (d is unused: kept for symmetry)."""
    h = {n: random_matrix(ring, c.dim(n + 1), c.dim(n), rng) for n in range(c.lo - 1, c.hi + 1)}
    lam = ring.random_element(rng)
    maps = {}
    for n in c.degrees:
        m = c.diff(n + 1) @ h[n] + h[n - 1] @ c.diff(n) + Matrix.scalar(ring, c.dim(n), lam)
        maps[n] = m
    return ChainMap(c, c, maps)


@given(rings, seeds)
def test_maps_between_acyclic_complexes_are_quasi_isos(ring, seed):
    rng = random.Random(seed)
    c = random_acyclic(ring, rng, max_length=4, max_dim=3)
    f = _chain_map(ring, rng, c, None)
    assert cx.is_chain_map(f)
    assert cx.is_quasi_iso(f)


@given(rings, seeds)
def test_cone_sequence_is_split_exact(ring, seed):
    rng = random.Random(seed)
    c = random_complex(ring, rng)
    f = _chain_map(ring, rng, c, None)
    i, p = cx.cone_inclusion(f), cx.cone_projection(f)
    assert cx.is_chain_map(i) and cx.is_chain_map(p)
    for n in range(c.lo - 1, c.hi + 3):
        assert cx.is_exact_sequence(ring, [i.at(n), p.at(n)])


# -- total complexes -----------------------------------------------------------------------------

def test_single_row_total_is_the_row():
    c = random_acyclic(QQ, 8)
    assert cx.same_complex(cx.total_complex(ComplexOfComplexes(0, (c,))), c)
    # in row 1 the differential changes sign
    t = cx.total_complex(ComplexOfComplexes(1, (c,)))
    assert all(t.diff(n + 1) == -c.diff(n) for n in range(c.lo + 1, c.hi + 1))


def test_single_column_total_is_the_column_with_signs():
    # rows are objects concentrated in degree 0, vertical maps form the column
    rows = tuple(cx.concentrated(QQ, 0, 1) for _ in range(2))
    cc = ComplexOfComplexes(0, rows, ({0: M(QQ, [[3]])},))
    t = cx.total_complex(cc)
    assert t.diff(1) == M(QQ, [[3]])
    assert cx.is_acyclic(t)


def test_square_of_identities_has_acyclic_total():
    # rows 0 -> N -1-> N -> 0 in degrees 0, 1; vertical identities
    N = 2
    row = chain(QQ, 0, (N, N), [I(QQ, N)])
    cc = ComplexOfComplexes(0, (row, row), ({0: I(QQ, N), 1: I(QQ, N)},))
    assert cx.validate_bicomplex(cc) == []
    t = cx.total_complex(cc)
    assert t.dims == (2, 4, 2)
    assert cx.is_acyclic(t)


def test_anticommuting_square_is_rejected():
    N = 1
    row = chain(QQ, 0, (N, N), [I(QQ, N)])
    cc = ComplexOfComplexes(0, (row, row), ({0: I(QQ, N), 1: -I(QQ, N)},))
    assert cx.validate_bicomplex(cc) != []


@given(rings, seeds)
def test_total_of_acyclic_rows_is_acyclic(ring, seed):
    rng = random.Random(seed)
    c = random_acyclic(ring, rng, max_length=3, max_dim=2)
    f = _chain_map(ring, rng, c, None)
    cc = ComplexOfComplexes(0, (c, c), (f.as_dict(),))
    assert cx.is_acyclic(cx.total_complex(cc))


def test_binary_total_complex():
    theta = M(QQ, [[1, 1], [0, 1]])
    row = auto_complex(theta)
    cc = ComplexOfComplexes(0, (row,))
    t = cx.total_complex(cc)
    assert isinstance(t, BinaryComplex) and t.diff_top(1) == theta


# -- Euler characteristic and filtrations ----------------------------------------------------------

@given(st.sampled_from([QQ, F5]), seeds)
def test_euler_char_of_acyclic_is_zero(ring, seed):
    assert cx.euler_char(random_acyclic(ring, seed)) == 0


def test_euler_char_examples():
    assert cx.euler_char(cx.concentrated(QQ, 0, 3)) == 3
    assert cx.euler_char(cx.concentrated(QQ, 1, 3)) == -3


@given(rings, seeds)
def test_naive_filtration(ring, seed):
    b = random_acyclic_binary(ring, seed)
    pieces = cx.naive_filtration_pieces(b)
    assert len(pieces) == b.hi - b.lo + 1
    assert all(cx.is_diagonal(p) for p in pieces)
    assert sum(p.total_dim() for p in pieces) == b.total_dim()


def test_naive_filtration_of_a_concentrated_complex():
    b = BinaryComplex(QQ, 2, (3,))
    assert cx.naive_filtration_pieces(b) == [b]
