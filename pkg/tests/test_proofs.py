import pytest
from hypothesis import given, settings, strategies as st

from binarytor import complexes as cx
from binarytor import relative as rel
from binarytor.fabricate import random_rel_object
from binarytor.matrix import Matrix
from binarytor.proofs import (COMPOSITES, ClassMismatch, GradingIrreparable, PreconditionFailed,
                              UnequalClass, composite_certificate, k0_witness_construct,
                              k0_witness_verify, k0omegashift_witness, part0_reduction,
                              part1_construct, part2_construct, part3_construct, part3_fabricate,
                              ses_witness, totbcf_check, totbcf_fabricate)
from binarytor.relative import BaseChange, Identity, Power, ZeroSource, ZeroTarget
from binarytor.rings import GF, QQ, ZZ
from binarytor.suites import break_comparison

F3, F5 = GF(3), GF(5)
seeds = st.integers(0, 10**6)
FUNCTORS = [Identity(QQ), Identity(F3), Power(2, QQ), BaseChange(ZZ, QQ), BaseChange(ZZ, F5)]
PART3_Q = "(i) g1 q' = q'' g0 and g2 r' = r'' g1"


def I(ring, n):
    return Matrix.identity(ring, n)


# -- K0 witnesses ---------------------------------------------------------------------------------

@pytest.mark.parametrize("ring", [QQ, F5, ZZ])
@pytest.mark.parametrize("m", [0, 1, 3])
def test_k0_construct_equal_dims(ring, m):
    for seed in (None, 1, 2):
        b = k0_witness_construct(ring, m, m, seed=seed)
        assert b.passes, b.failed()


@pytest.mark.parametrize("m,m2", [(2, 3), (1, 0), (4, 2)])
def test_k0_construct_unequal_dims(m, m2):
    with pytest.raises(UnequalClass):
        k0_witness_construct(QQ, m, m2)


def test_k0_verify_canonical_and_broken():
    b = k0_witness_verify(QQ, 2, 2, 0, 2, 0, I(QQ, 2), Matrix.zeros(QQ, 0, 2), I(QQ, 2),
                          Matrix.zeros(QQ, 0, 2))
    assert b.passes
    singular = Matrix.from_rows(QQ, [[1, 0], [0, 0]])
    b = k0_witness_verify(QQ, 2, 2, 0, 2, 0, singular, Matrix.zeros(QQ, 0, 2), I(QQ, 2),
                          Matrix.zeros(QQ, 0, 2))
    assert b.failed() == ["sequence E"]


def test_k0_verify_rejects_wrong_shapes():
    b = k0_witness_verify(QQ, 2, 2, 0, 2, 0, I(QQ, 3), Matrix.zeros(QQ, 0, 2), I(QQ, 2),
                          Matrix.zeros(QQ, 0, 2))
    assert "a: M + V0 -> V1" in b.failed() and not b.passes


def test_ses_witness():
    i = Matrix.from_rows(QQ, [[1], [0], [0]])
    p = Matrix.from_rows(QQ, [[0, 1, 0], [0, 0, 1]])
    assert ses_witness(QQ, i, p).passes
    q = Matrix.from_rows(QQ, [[1, 1, 0], [0, 0, 1]])
    assert not ses_witness(QQ, i, q).passes


def test_ses_witness_over_zz_detects_index():
    i = Matrix.from_rows(ZZ, [[2]])
    p = Matrix.zeros(ZZ, 0, 1)
    assert not ses_witness(ZZ, i, p).passes


# -- part 0 to part 2 -----------------------------------------------------------------------------

@pytest.mark.parametrize("ring", [QQ, F3, ZZ])
def test_part0(ring):
    for seed in range(5):
        b = part0_reduction(random_rel_object(Identity(ring), seed))
        assert b.passes, b.failed()
        assert "p-morphism" in b.objects


def test_part0_needs_identity():
    with pytest.raises(rel.WrongFunctor):
        part0_reduction(random_rel_object(Power(2, QQ), 0))


@pytest.mark.parametrize("F", FUNCTORS, ids=lambda F: F.name)
def test_part1(F):
    for seed in range(3):
        for m in (0, 1, 2):
            b = part1_construct(F, m, m, seed=seed)
            assert b.passes, b.failed()


def test_part1_class_mismatch():
    with pytest.raises(ClassMismatch):
        part1_construct(Identity(QQ), 1, 2, seed=0)
    with pytest.raises(rel.WrongFunctor):
        part1_construct(ZeroSource(QQ), 1, 1)


@pytest.mark.parametrize("F", FUNCTORS, ids=lambda F: F.name)
def test_part2(F):
    for seed in range(3):
        b = part2_construct(random_rel_object(F, seed, equal_grading=True))
        assert b.passes, b.failed()


def test_part2_preconditions():
    F = Identity(QQ)
    one, two = cx.concentrated(QQ, 0, 1), cx.concentrated(QQ, 0, 2)
    x = rel.rel_b(F, (one, two), cx.delta(one))
    with pytest.raises(PreconditionFailed):
        part2_construct(x)
    # equal Euler characteristics, different gradings
    acyc = cx.chain(QQ, 0, (1, 1), [I(QQ, 1)])
    y_src = cx.direct_sum(one, acyc)
    with pytest.raises(GradingIrreparable):
        part2_construct(rel.rel_b(F, (one, y_src), cx.delta(one),
                                  ({0: I(QQ, 1)}, {0: Matrix.from_rows(QQ, [[1, 0]])})))


# -- part 3 ---------------------------------------------------------------------------------------

@pytest.mark.parametrize("F", [Identity(QQ), Identity(F3), BaseChange(ZZ, F5)], ids=lambda F: F.name)
def test_part3(F):
    for seed in range(2):
        b = part3_construct(part3_fabricate(F, seed))
        assert b.passes, b.failed()


@pytest.mark.parametrize("F", [Identity(F3), Identity(QQ)], ids=lambda F: F.name)
def test_part3_dropped_minus_fails_only_the_sign_identity(F):
    for seed in range(2):
        b = part3_construct(part3_fabricate(F, seed), drop_minus=True)
        assert b.failed() == [PART3_Q]


# -- shift, composites, total objects --------------------------------------------------------------

@given(st.sampled_from(FUNCTORS + [ZeroSource(QQ), ZeroTarget(F3)]), seeds)
@settings(max_examples=15)
def test_k0omegashift(F, seed):
    b = k0omegashift_witness(random_rel_object(F, seed))
    assert b.passes, b.failed()


def test_k0omegashift_numeric_inverse():
    z = cx.zero_complex(QQ)
    from binarytor.torsion import auto_complex
    x = rel.rel_b(ZeroSource(QQ), (z, z), auto_complex(Matrix.from_rows(QQ, [[5]])))
    b = k0omegashift_witness(x)
    assert b.passes and "cls(x[-1]) = cls(x)^-1" in [c.name for c in b.checks]


@pytest.mark.parametrize("F", FUNCTORS[:2], ids=lambda F: F.name)
def test_broken_comparison_fails_only_validity(F):
    seed = 0
    while True:
        x = random_rel_object(F, seed)
        if not cx.is_acyclic(x.src[0]):
            break
        seed += 1
    y = break_comparison(x)
    assert rel.validate_rel(y) != []
    assert k0omegashift_witness(y).failed() == ["x is a valid object"]


def _composite_input(which, F, seed):
    from binarytor.fabricate import random_acyclic_binary
    first = which.split("->")[0].strip("()")
    G = {"1,F": ZeroSource(F.source), "0,1": ZeroSource(F.target), "1,0": F}[first]
    if G.source_is_zero:
        zs = cx.zero_complex(G.source)
        return rel.rel_b(G, (zs, zs), random_acyclic_binary(G.target, seed, max_length=3, max_dim=2))
    return random_rel_object(G, seed)


@pytest.mark.parametrize("which", COMPOSITES)
@pytest.mark.parametrize("F", [Identity(F3), Power(2, QQ), BaseChange(ZZ, QQ)], ids=lambda F: F.name)
def test_composites(which, F):
    for seed in range(3):
        b = composite_certificate(which, _composite_input(which, F, seed), F)
        assert b.passes, b.failed()


def test_composite_rejects_unknown():
    with pytest.raises(rel.WrongPair):
        composite_certificate("(F,1)->(1,F)", random_rel_object(Identity(QQ), 0), Identity(QQ))


@pytest.mark.parametrize("F", FUNCTORS, ids=lambda F: F.name)
def test_totbcf(F):
    for seed in range(3):
        b = totbcf_check(*totbcf_fabricate(F, seed))
        assert b.passes, b.failed()


def test_bundle_merge_prefixes_names():
    a = k0_witness_construct(QQ, 1, 1)
    b = k0_witness_construct(QQ, 2, 2, seed=3)
    n = len(a.all_checks())
    a.merge(b, "second")
    assert len(a.all_checks()) == n + len(b.all_checks())
    assert any(c.name.startswith("exact: second/") for c in a.all_checks())
