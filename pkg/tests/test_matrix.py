import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from binarytor.matrix import (DimensionMismatch, Matrix, NonSquare, NoSolution, WrongRing, det,
                              inverse, kernel_basis, random_invertible, random_matrix, rank,
                              smith_invariants, smith_normal_form, solve)
from binarytor.rings import GF, QQ, ZZ, parse_ring

F5 = GF(5)
seeds = st.integers(0, 10**6)
rings = st.sampled_from([QQ, F5, ZZ])


def M(ring, rows):
    return Matrix.from_rows(ring, rows)


def rand(ring, seed, max_dim=5):
    rng = random.Random(seed)
    return random_matrix(ring, rng.randint(0, max_dim), rng.randint(0, max_dim), rng)


# -- rings --------------------------------------------------------------------------------

@pytest.mark.parametrize("text,name", [("QQ", "QQ"), ("ZZ", "ZZ"), ("F5", "F5"), ("GF(7)", "F7")])
def test_parse_ring(text, name):
    assert parse_ring(text).name == name


@pytest.mark.parametrize("text", ["F4", "RR", "F1", ""])
def test_parse_ring_rejects(text):
    with pytest.raises(ValueError):
        parse_ring(text)


def test_scalars_are_canonical():
    assert QQ.coerce(2) == Fraction(2) and type(QQ.coerce(2)) is Fraction
    assert F5.coerce(-1) == 4
    assert ZZ.coerce(Fraction(6, 3)) == 2
    with pytest.raises(ValueError):
        ZZ.coerce(Fraction(1, 2))


# -- rank, kernel, det -------------------------------------------------------------------

@pytest.mark.parametrize("m,ring,expected", [
    ([], QQ, 0),
    ([[1, 0], [0, 1]], F5, 2),
    ([[1, 2], [2, 4]], QQ, 1),
    ([[2, 4], [1, 2]], ZZ, 1),
    ([[1, 2], [3, 1]], F5, 1),   # det = -5
])
def test_rank_examples(m, ring, expected):
    assert rank(M(ring, m)) == expected


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 3)).shape == (3, 0)
    k = kernel_basis(Matrix.zeros(QQ, 2, 3))
    assert k.shape == (3, 3) and rank(k) == 3
    k = kernel_basis(M(QQ, [[1, 2], [2, 4]]))
    assert k.cols == 1 and k[0, 0] == -2 * k[1, 0] != 0


@pytest.mark.parametrize("m,ring,expected", [
    ([[2]], QQ, 2),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], ZZ, 1),
    ([[0, -1], [1, 0]], QQ, 1),
    ([[1, 2], [3, 4]], ZZ, -2),
    ([[1, 2], [3, 4]], F5, 3),
])
def test_det_examples(m, ring, expected):
    assert det(M(ring, m)) == expected


def test_det_of_product_example():
    a, b = M(QQ, [[1, 1], [0, 1]]), M(QQ, [[0, -1], [1, 0]])
    assert det(a @ b) == 1


def test_det_nonsquare():
    with pytest.raises(NonSquare):
        det(Matrix.zeros(QQ, 2, 3))


@given(rings, seeds)
def test_rank_and_det_match_reference(ring, seed):
    m = rand(ring, seed)
    assert rank(m) == oracles.rank(m)
    if m.is_square():
        assert det(m) == oracles.det(m)


@given(st.sampled_from([QQ, F5]), seeds)
def test_rank_nullity(ring, seed):
    m = rand(ring, seed)
    k = kernel_basis(m)
    assert rank(m) + k.cols == m.cols
    assert (m @ k).is_zero()


@given(rings, seeds)
def test_det_multiplicative(ring, seed):
    rng = random.Random(seed)
    n = rng.randint(0, 4)
    a, b = random_matrix(ring, n, n, rng), random_matrix(ring, n, n, rng)
    assert det(a @ b) == ring.normalize(det(a) * det(b))


def test_integer_kernel_is_a_lattice_basis():
    k = kernel_basis(M(ZZ, [[2, 4, 6]]))
    assert k.cols == 2
    # the lattice basis generates (-2, 1, 0): solvable over the integers
    solve(k, M(ZZ, [[-2], [1], [0]]))


# -- solve ---------------------------------------------------------------------------------

def test_solve_examples():
    b = M(QQ, [[1, 2], [3, 4]])
    assert solve(Matrix.identity(QQ, 2), b) == b
    assert solve(M(QQ, [[2]]), M(QQ, [[1]])) == M(QQ, [[Fraction(1, 2)]])
    with pytest.raises(NoSolution):
        solve(M(ZZ, [[2]]), M(ZZ, [[1]]))
    with pytest.raises(DimensionMismatch):
        solve(Matrix.identity(QQ, 2), Matrix.zeros(QQ, 3, 1))


@given(rings, seeds)
def test_solve_consistent_rhs(ring, seed):
    rng = random.Random(seed)
    m = random_matrix(ring, rng.randint(1, 4), rng.randint(1, 4), rng)
    b = m @ random_matrix(ring, m.cols, rng.randint(1, 2), rng)
    assert m @ solve(m, b) == b


def test_integer_unsolvable_has_no_small_solution():
    m, b = M(ZZ, [[2, 4], [0, 6]]), M(ZZ, [[2], [3]])
    with pytest.raises(NoSolution):
        solve(m, b)
    assert not any(2 * x + 4 * y == 2 and 6 * y == 3 for x in range(-9, 10) for y in range(-9, 10))


# -- Smith normal form -----------------------------------------------------------------------

def test_smith_examples():
    U, D, V = smith_normal_form(Matrix.diag(ZZ, [2, 3]))
    assert [D[0, 0], D[1, 1]] == [1, 6]
    _, D, _ = smith_normal_form(Matrix.identity(ZZ, 3))
    assert D == Matrix.identity(ZZ, 3)
    _, D, _ = smith_normal_form(Matrix.zeros(ZZ, 2, 3))
    assert D.is_zero()
    with pytest.raises(WrongRing):
        smith_normal_form(Matrix.identity(QQ, 2))


def test_smith_does_not_blow_up():
    # a matrix on which naive elimination grows entries to thousands of digits
    m = M(ZZ, [[14, -10, -23, -1, 24, -23, -10, -7], [0, -6, 10, -4, -2, 3, 2, 2],
               [-7, 14, -5, 5, -6, 5, 3, 1], [13, -7, -31, -3, 31, -29, -9, -7],
               [-38, 22, 78, 4, -77, 73, 27, 20], [25, -11, -62, -3, 58, -55, -18, -14]])
    U, D, V = smith_normal_form(m)
    assert U @ m @ V == D
    assert max(abs(x) for r in U.tolist() + V.tolist() for x in r) < 10**40


@given(seeds)
def test_smith_properties(seed):
    rng = random.Random(seed)
    m = random_matrix(ZZ, rng.randint(0, 6), rng.randint(0, 6), rng, bound=20)
    U, D, V = smith_normal_form(m)
    assert U @ m @ V == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    assert all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)
    inv = smith_invariants(m)
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))
    assert inv == oracles.smith_invariants(m)


# -- random invertible matrices --------------------------------------------------------------

def test_random_invertible_examples():
    assert random_invertible(QQ, 0, 1).shape == (0, 0)
    assert random_invertible(QQ, 1, 1) == Matrix.identity(QQ, 1)
    assert random_invertible(F5, 4, 9) == random_invertible(F5, 4, 9)


@given(rings, seeds, st.integers(0, 5))
def test_random_invertible_has_unit_determinant(ring, seed, n):
    g = random_invertible(ring, n, seed)
    assert det(g) == 1
    assert g @ inverse(g) == Matrix.identity(ring, n)


# -- arithmetic -------------------------------------------------------------------------------

@given(rings, seeds)
def test_ring_axioms_on_matrices(ring, seed):
    rng = random.Random(seed)
    a, b, c = (random_matrix(ring, 3, 3, rng) for _ in range(3))
    assert (a + b) @ c == a @ c + b @ c
    assert a @ (b @ c) == (a @ b) @ c
    assert a - b == a + (-b)
    assert (a - a).is_zero()


def test_rational_product_reduces_entries():
    a = M(QQ, [[Fraction(1, 2), Fraction(1, 3)]])
    b = M(QQ, [[Fraction(2, 3)], [Fraction(3, 2)]])
    (x,), = (a @ b).tolist()
    assert x == Fraction(5, 6) and type(x) is Fraction
