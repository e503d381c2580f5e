import random

import pytest
from hypothesis import given, strategies as st

from binarytor import complexes as cx
from binarytor import relative as rel
from binarytor.complexes import BinaryComplex, ChainMap, chain
from binarytor.fabricate import random_acyclic, random_acyclic_binary, random_rel_object
from binarytor.matrix import Matrix, random_gl, inverse
from binarytor.relative import (BaseChange, Identity, Power, ZeroSource, ZeroTarget, class_of,
                                difference_as_single_generator, pair_map, parse_functor, rel_b, rel_c)
from binarytor.rings import GF, QQ, ZZ
from binarytor.torsion import auto_complex, cls

F3, F5 = GF(3), GF(5)
seeds = st.integers(0, 10**6)
FUNCTORS = [Identity(QQ), Identity(F3), Power(2, QQ), BaseChange(ZZ, QQ), BaseChange(ZZ, F5)]
functors = st.sampled_from(FUNCTORS)


def M(ring, rows):
    return Matrix.from_rows(ring, rows)


def point(ring, n=1):
    return cx.concentrated(ring, 0, n)


def point_plus_acyclic(ring):
    """Q concentrated in degree 0, plus 0 -> Q -1-> Q -> 0 in degrees 0, 1."""
    return chain(ring, 0, (2, 1), [M(ring, [[0], [1]])])


# -- functors -------------------------------------------------------------------------------------

@pytest.mark.parametrize("text,name", [
    ("Identity(QQ)", "Identity(QQ)"),
    ("Power(2,QQ)", "Power(2,QQ)"),
    ("BaseChange(ZZ->F5)", "BaseChange(ZZ->F5)"),
    ("0->QQ", "0->QQ"),
    ("F3->0", "F3->0"),
    ("ZeroSource(F3)", "0->F3"),
    ("ZeroTarget(QQ)", "QQ->0"),
])
def test_parse_functor(text, name):
    assert parse_functor(text).name == name


@pytest.mark.parametrize("text", ["Identity(R)", "BaseChange(QQ->ZZ)", "Power(0,QQ)", "F(QQ)"])
def test_parse_functor_rejects(text):
    with pytest.raises(ValueError):
        parse_functor(text)


def test_power_is_entrywise():
    F = Power(2, QQ)
    assert F.matrix(M(QQ, [[1, 2]])) == M(QQ, [[1, 0, 2, 0], [0, 1, 0, 2]])
    assert F.unit(cls(auto_complex(M(QQ, [[3]])))).value == 9


def test_base_change_reduces():
    F = BaseChange(ZZ, F5)
    assert F.matrix(M(ZZ, [[7, -1]])) == M(F5, [[2, 4]])
    assert F.unit(cls(auto_complex(M(ZZ, [[-1]])))).value == 4


@given(st.sampled_from([Identity(QQ), Power(2, QQ), Power(3, F5), BaseChange(ZZ, QQ), BaseChange(ZZ, F5)]),
       seeds)
def test_functors_preserve_acyclicity_and_composition(F, seed):
    rng = random.Random(seed)
    c = random_acyclic(F.source, rng, max_length=4, max_dim=3)
    assert cx.is_acyclic(F(c))
    a, b = random_gl(F.source, 3, rng), random_gl(F.source, 3, rng)
    assert F.matrix(a @ b) == F.matrix(a) @ F.matrix(b)
    assert F.matrix(Matrix.identity(F.source, 2)) == Matrix.identity(F.target, F.dim(2))


# -- objects --------------------------------------------------------------------------------------

def test_valid_object_of_c():
    F = Identity(QQ)
    incl = {0: M(QQ, [[1], [0]])}
    x = rel_c(F, point(QQ), point_plus_acyclic(QQ), incl)
    assert rel.validate_rel(x) == []
    assert not rel.is_acyclic_rel(x)


def test_comparison_must_be_a_quasi_iso():
    F = Identity(QQ)
    x = rel_c(F, point(QQ), point_plus_acyclic(QQ), {0: M(QQ, [[0], [1]])})
    assert any("quasi-isomorphism" in p for p in rel.validate_rel(x))


def test_comparison_must_be_a_chain_map():
    F = Identity(QQ)
    tar = chain(QQ, 0, (1, 1), [M(QQ, [[1]])])
    src = chain(QQ, 0, (1, 1), [M(QQ, [[1]])])
    x = rel_c(F, src, tar, {0: M(QQ, [[1]])})
    assert any("chain map" in p for p in rel.validate_rel(x))


def test_zero_pairs():
    z = cx.zero_complex(QQ)
    b = auto_complex(M(QQ, [[2]]))
    x = rel_b(ZeroSource(QQ), (z, z), b)
    assert rel.validate_rel(x) == [] and rel.is_acyclic_rel(x)
    assert class_of(x).value == 2
    y = rel_b(ZeroTarget(QQ), (point(QQ, 3), point(QQ, 1)), BinaryComplex(QQ, 0, ()))
    assert rel.validate_rel(y) == []
    assert class_of(y) == 2
    bad = rel_b(ZeroTarget(QQ), (z, z), b)
    assert rel.validate_rel(bad) != []


def test_ring_mismatch_is_rejected():
    with pytest.raises(rel.InvalidObject):
        rel_c(Identity(QQ), point(F5), point(QQ))


def test_binary_object_needs_binary_target():
    with pytest.raises(rel.InvalidObject):
        rel_b(Identity(QQ), (point(QQ), point(QQ)), point(QQ))


@given(functors, seeds)
def test_random_objects_are_valid(F, seed):
    x = random_rel_object(F, seed)
    assert rel.validate_rel(x) == []


@given(functors, seeds, st.integers(-2, 2))
def test_shift_rel(F, seed, i):
    x = random_rel_object(F, seed)
    y = rel.shift_rel(x, i)
    assert rel.validate_rel(y) == []
    assert rel.same_rel(rel.shift_rel(y, -i), x)


@given(functors, seeds, seeds)
def test_direct_sum_rel(F, s1, s2):
    a, b = random_rel_object(F, s1), random_rel_object(F, s2)
    s = rel.direct_sum_rel(a, b)
    assert rel.validate_rel(s) == []
    assert s.tar.total_dim() == a.tar.total_dim() + b.tar.total_dim()


@given(functors, seeds)
def test_top_bot_tau_delta(F, seed):
    x = random_rel_object(F, seed)
    assert rel.same_rel(rel.rel_tau(rel.rel_tau(x)), x)
    d = rel.rel_delta(rel.rel_top(x))
    assert rel.is_diagonal_rel(d) and rel.validate_rel(d) == []


def test_difference_as_single_generator():
    z = cx.zero_complex(QQ)
    G = ZeroSource(QQ)
    a = rel_b(G, (z, z), auto_complex(M(QQ, [[6]])))
    b = rel_b(G, (z, z), auto_complex(M(QQ, [[2]])))
    d = difference_as_single_generator(a, b)
    assert class_of(d).value == 3
    H = ZeroTarget(QQ)
    e = rel_b(H, (point(QQ, 2), point(QQ, 1)), BinaryComplex(QQ, 0, ()))
    f = rel_b(H, (point(QQ, 1), point(QQ, 1)), BinaryComplex(QQ, 0, ()))
    assert class_of(difference_as_single_generator(e, f)) == class_of(e) - class_of(f) == 1
    with pytest.raises(rel.PairMismatch):
        difference_as_single_generator(a, e)


def test_formal_class_evaluates_without_rewriting():
    z = cx.zero_complex(QQ)
    G = ZeroSource(QQ)
    a = rel_b(G, (z, z), auto_complex(M(QQ, [[6]])))
    b = rel_b(G, (z, z), auto_complex(M(QQ, [[2]])))
    s = rel.FormalClass.of(a) - rel.FormalClass.of(b)
    assert len(s.terms) == 2
    assert s.evaluate().value == 3


# -- morphisms --------------------------------------------------------------------------------------

@given(functors, seeds)
def test_identity_is_a_p_morphism(F, seed):
    x = random_rel_object(F, seed)
    assert rel.is_p_morphism(rel.identity_rel(x))


@given(functors, seeds)
def test_cone_of_identity_is_acyclic(F, seed):
    x = random_rel_object(F, seed)
    c = rel.rel_cone(rel.identity_rel(x))
    assert rel.validate_rel(c) == []
    assert rel.is_acyclic_rel(c)


def test_p_morphism_examples():
    F = Identity(QQ)
    x = rel_c(F, point(QQ), point_plus_acyclic(QQ), {0: M(QQ, [[1], [0]])})
    # rescaling the target by 2 and the source by 2 commutes and is a p-morphism
    f = rel.rel_map(x, x, [{0: M(QQ, [[2]])}], {0: M(QQ, [[2, 0], [0, 2]]), 1: M(QQ, [[2]])})
    assert rel.is_p_morphism(f)
    # the same with a zero source map no longer commutes
    g = rel.rel_map(x, x, [{0: M(QQ, [[0]])}], {0: M(QQ, [[2, 0], [0, 2]]), 1: M(QQ, [[2]])})
    assert any("commute" in p for p in rel.p_morphism_problems(g))
    # a target map that is not invertible
    h = rel.rel_map(x, x, [{0: M(QQ, [[1]])}], {0: M(QQ, [[1, 0], [0, 0]]), 1: M(QQ, [[0]])})
    assert any("isomorphism" in p for p in rel.p_morphism_problems(h))


# -- maps of pairs ---------------------------------------------------------------------------------------

def test_pair_maps_examples():
    F = BaseChange(ZZ, F5)
    z = cx.zero_complex(ZZ)
    b = auto_complex(M(ZZ, [[-1]]))
    x = rel_b(ZeroSource(ZZ), (z, z), b)
    y = pair_map("1,F", x, F)
    assert y.functor == ZeroSource(F5)
    assert class_of(y).value == F.unit(class_of(x)).value == 4

    w = rel_b(ZeroSource(F5), (cx.zero_complex(F5),) * 2, auto_complex(M(F5, [[2]])))
    v = pair_map("0,1", w, F)
    assert v.functor == F and rel.validate_rel(v) == []

    u = random_rel_object(F, 3)
    p = pair_map("1,0", u, F)
    assert p.functor == ZeroTarget(ZZ) and p.src == u.src

    q = pair_map("F,1", p, F)
    assert q.functor == ZeroTarget(F5)
    assert class_of(q) == class_of(p)


def test_pair_map_rejects_wrong_object():
    F = Identity(QQ)
    x = random_rel_object(F, 1)
    with pytest.raises(rel.WrongPair):
        pair_map("1,F", x, F)
    with pytest.raises(rel.WrongPair):
        pair_map("2,3", x, F)


@given(st.sampled_from([Identity(QQ), Power(2, QQ), BaseChange(ZZ, QQ)]), seeds)
def test_consecutive_pair_maps_compose_to_zero_class(F, seed):
    # (0,1) then (1,0): an object over 0 -> N lands on an object with zero source
    rng = random.Random(seed)
    b = random_acyclic_binary(F.target, rng, max_length=3, max_dim=2)
    zs = cx.zero_complex(F.target)
    x = rel_b(ZeroSource(F.target), (zs, zs), b)
    y = pair_map("1,0", pair_map("0,1", x, F), F)
    assert class_of(y) == 0
