"""Relative categories over a concrete exact functor.

An object of ``C[F]`` is a triple ``(M, N, u)`` with ``M`` a complex over the
source ring, ``N`` a complex over the target ring and ``u: F M -> N`` a
quasi-isomorphism.  In ``B[F]`` the source is a pair of complexes, the target
a binary complex and ``u`` a pair of quasi-isomorphisms onto its top and
bottom.  The functor kinds are the identity, the ``r``-th power, base change
out of the integers, and the two degenerate pairs ``0 -> N`` and ``M -> 0``
used by the five-term sequence.
"""
from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import complexes as cx
from .complexes import (BinaryComplex, ChainComplex, ChainMap, GradedObject, _span)
from .matrix import Matrix, block_matrix, block_diag
from .rings import Ring, ZZ, QQ, parse_ring


class InvalidObject(ValueError):
    pass


class WrongPair(ValueError):
    pass


class PairMismatch(ValueError):
    pass


class WrongFunctor(ValueError):
    pass


# -- functors -----------------------------------------------------------------------------------------

KINDS = ("identity", "power", "base_change", "zero_source", "zero_target")


@dataclass(frozen=True)
class FunctorSpec:
    kind: str
    source: Ring
    target: Ring
    r: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown functor kind {self.kind!r}")
        if self.kind == "base_change":
            if self.source != ZZ or self.target == ZZ:
                raise ValueError("base change goes from ZZ to QQ or a prime field")
        elif self.source != self.target:
            raise ValueError(f"{self.kind} needs equal source and target rings")
        if self.kind == "power" and self.r < 1:
            raise ValueError("power needs r >= 1")
        if self.kind != "power" and self.r != 1:
            raise ValueError("only power carries an exponent")

    @property
    def name(self) -> str:
        s, t = self.source.name, self.target.name
        return {"identity": f"Identity({s})", "power": f"Power({self.r},{s})",
                "base_change": f"BaseChange({s}->{t})", "zero_source": f"0->{t}",
                "zero_target": f"{s}->0"}[self.kind]

    def __repr__(self):
        return self.name

    @property
    def source_is_zero(self) -> bool:
        return self.kind == "zero_source"

    @property
    def target_is_zero(self) -> bool:
        return self.kind == "zero_target"

    def hom(self, x):
        return self.target.coerce(x)

    def dim(self, n: int) -> int:
        if self.target_is_zero:
            return 0
        return self.r * n

    def matrix(self, m: Matrix) -> Matrix:
        """Entrywise: ``a`` becomes ``a * I_r`` (a permutation conjugate of the
        ``r``-fold block diagonal), so ``F`` commutes with block constructions."""
        if m.ring != self.source:
            raise WrongFunctor(f"{self.name} applied to a matrix over {m.ring.name}")
        if self.target_is_zero:
            return Matrix.zeros(self.target, 0, 0)
        if self.kind == "power" and self.r > 1:
            return _power_matrix(m, self.r)
        if self.kind == "base_change":
            return m.map_ring(self.target, self.hom)
        return m

    def graded(self, c: GradedObject) -> GradedObject:
        if c.ring != self.source:
            raise WrongFunctor(f"{self.name} applied to an object over {c.ring.name}")
        if self.target_is_zero:
            return _zero_like(c, self.target)
        if self.source_is_zero and c.total_dim():
            raise WrongFunctor("nonzero object in the zero category")
        dims = tuple(self.dim(n) for n in c.dims)
        if isinstance(c, BinaryComplex):
            return BinaryComplex(self.target, c.lo, dims, tuple(self.matrix(m) for m in c.d_top),
                                 tuple(self.matrix(m) for m in c.d_bot))
        if isinstance(c, ChainComplex):
            return ChainComplex(self.target, c.lo, dims, tuple(self.matrix(m) for m in c.d))
        return GradedObject(self.target, c.lo, dims)

    __call__ = graded

    def chain_map(self, f: ChainMap) -> ChainMap:
        s, t = self.graded(f.source), self.graded(f.target)
        if self.target_is_zero:
            return ChainMap(s, t, {})
        return ChainMap(s, t, {n: self.matrix(m) for n, m in f.maps})

    def unit(self, u):
        """Image of a unit class: the identity, the ``r``-th power, or the ring map."""
        from .torsion import UnitClass
        if u.ring != self.source:
            raise WrongFunctor("unit over the wrong ring")
        if self.target_is_zero:
            return None
        v = self.hom(u.value)
        out = self.target.one()
        for _ in range(self.r):
            out = self.target.normalize(out * v)
        return UnitClass(self.target, out)

    def zero_category_pair(self, side: str) -> "FunctorSpec":
        """``0 -> source`` / ``0 -> target`` / ``source -> 0`` / ``target -> 0``."""
        ring = self.source if side in ("0->src", "src->0") else self.target
        return ZeroSource(ring) if side.startswith("0") else ZeroTarget(ring)


@lru_cache(maxsize=4096)
def _power_matrix(m: Matrix, r: int) -> Matrix:
    return m.kron(Matrix.identity(m.ring, r))


def _zero_like(c, ring):
    if isinstance(c, BinaryComplex):
        return BinaryComplex(ring, 0, ())
    if isinstance(c, ChainComplex):
        return ChainComplex(ring, 0, ())
    return GradedObject(ring, 0, ())


def Identity(ring: Ring) -> FunctorSpec:
    return FunctorSpec("identity", ring, ring)


def Power(r: int, ring: Ring) -> FunctorSpec:
    return FunctorSpec("power", ring, ring, r)


def BaseChange(source: Ring, target: Ring) -> FunctorSpec:
    return FunctorSpec("base_change", source, target)


def ZeroSource(ring: Ring) -> FunctorSpec:
    """The pair ``0 -> N``."""
    return FunctorSpec("zero_source", ring, ring)


def ZeroTarget(ring: Ring) -> FunctorSpec:
    """The pair ``M -> 0``."""
    return FunctorSpec("zero_target", ring, ring)


_FUNCTOR_RE = [
    (re.compile(r"^Identity\((\w+)\)$"), lambda m: Identity(parse_ring(m[1]))),
    (re.compile(r"^Power\((\d+),\s*(\w+)\)$"), lambda m: Power(int(m[1]), parse_ring(m[2]))),
    (re.compile(r"^BaseChange\((\w+)\s*->\s*(\w+)\)$"),
     lambda m: BaseChange(parse_ring(m[1]), parse_ring(m[2]))),
    (re.compile(r"^0\s*->\s*(\w+)$"), lambda m: ZeroSource(parse_ring(m[1]))),
    (re.compile(r"^ZeroSource\((\w+)\)$"), lambda m: ZeroSource(parse_ring(m[1]))),
    (re.compile(r"^ZeroTarget\((\w+)\)$"), lambda m: ZeroTarget(parse_ring(m[1]))),
    (re.compile(r"^(\w+)\s*->\s*0$"), lambda m: ZeroTarget(parse_ring(m[1]))),
]


def parse_functor(text: str) -> FunctorSpec:
    t = text.strip()
    for rx, make in _FUNCTOR_RE:
        m = rx.match(t)
        if m:
            return make(m)
    raise ValueError(f"cannot parse functor descriptor {text!r}")


# -- objects ---------------------------------------------------------------------------------------------

def _as_map(f, source, target) -> ChainMap:
    maps = f.maps if isinstance(f, ChainMap) else dict(f or {})
    return ChainMap(source, target, maps)


def _per_side(f) -> tuple:
    """A tuple of per-side maps, from either one map or a tuple of them."""
    if isinstance(f, tuple) and f and all(isinstance(e, (dict, ChainMap)) or e is None for e in f):
        return f
    return (f,)


@dataclass(frozen=True)
class RelObject:
    functor: FunctorSpec
    src: tuple
    tar: GradedObject
    comp: tuple

    def __post_init__(self):
        src = tuple(self.src)
        if len(src) != self.arity:
            raise InvalidObject(f"expected {self.arity} source complexes")
        for s in src:
            if s.ring != self.functor.source:
                raise InvalidObject(f"source over {s.ring.name}, functor {self.functor.name}")
        if self.tar.ring != self.functor.target:
            raise InvalidObject(f"target over {self.tar.ring.name}, functor {self.functor.name}")
        comp = tuple(self.comp) if self.comp else (None,) * self.arity
        if len(comp) != self.arity:
            raise InvalidObject(f"expected {self.arity} comparison maps")
        comp = tuple(_as_map(c, self.functor(s), self.tar_side(k))
                     for k, (c, s) in enumerate(zip(comp, src)))
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "comp", comp)

    arity = 1

    def tar_side(self, k: int) -> ChainComplex:
        return self.tar

    @property
    def ring(self) -> Ring:
        return self.functor.target


class RelObjectC(RelObject):
    """``(M, N, u)`` with ``u: F M -> N``."""
    arity = 1

    def __repr__(self):
        return f"RelObjectC({self.functor.name}, src={self.src[0].dims}, tar={self.tar.dims})"


class RelObjectB(RelObject):
    """``((M1, M2), N, (u1, u2))`` with ``u1: F M1 -> top N`` and ``u2: F M2 -> bot N``."""
    arity = 2

    def __post_init__(self):
        if not isinstance(self.tar, BinaryComplex):
            raise InvalidObject("the target of an object of B[F] is a binary complex")
        super().__post_init__()

    def tar_side(self, k: int) -> ChainComplex:
        return cx.top(self.tar) if k == 0 else cx.bot(self.tar)

    def __repr__(self):
        return (f"RelObjectB({self.functor.name}, src={self.src[0].dims}/{self.src[1].dims}, "
                f"tar={self.tar.dims})")


def rel_b(functor, src, tar, comp=None) -> RelObjectB:
    return RelObjectB(functor, tuple(src), tar, tuple(comp) if comp else ())


def rel_c(functor, src, tar, comp=None) -> RelObjectC:
    return RelObjectC(functor, (src,), tar, (comp,) if comp is not None else ())


def zero_rel(functor: FunctorSpec, binary: bool = True) -> RelObject:
    zs = cx.zero_complex(functor.source)
    if binary:
        return rel_b(functor, (zs, zs), BinaryComplex(functor.target, 0, ()))
    return rel_c(functor, zs, cx.zero_complex(functor.target))


def validate_rel(x: RelObject) -> list[str]:
    """Violations of the structural invariants (empty list when valid)."""
    out = []
    for k, s in enumerate(x.src):
        out += [f"src[{k}]: {p}" for p in cx.validate(s)]
    out += [f"tar: {p}" for p in cx.validate(x.tar)]
    if out:
        return out
    if x.functor.source_is_zero and any(s.total_dim() for s in x.src):
        out.append("source must be zero over the pair 0 -> N")
    if x.functor.target_is_zero and x.tar.total_dim():
        out.append("target must be zero over the pair M -> 0")
    for k, u in enumerate(x.comp):
        if not cx.is_chain_map(u):
            out.append(f"comparison {k} is not a chain map")
        elif not cx.is_quasi_iso(u):
            out.append(f"comparison {k} is not a quasi-isomorphism")
    return out


def is_valid_rel(x: RelObject) -> bool:
    return not validate_rel(x)


def is_acyclic_rel(x: RelObject) -> bool:
    if validate_rel(x):
        raise InvalidObject("; ".join(validate_rel(x)))
    return all(cx.is_acyclic(s) for s in x.src) and cx.is_acyclic(x.tar)


def rel_top(x: RelObjectB) -> RelObjectC:
    return RelObjectC(x.functor, (x.src[0],), cx.top(x.tar), (x.comp[0],))


def rel_bot(x: RelObjectB) -> RelObjectC:
    return RelObjectC(x.functor, (x.src[1],), cx.bot(x.tar), (x.comp[1],))


def rel_delta(x: RelObjectC) -> RelObjectB:
    return RelObjectB(x.functor, (x.src[0], x.src[0]), cx.delta(x.tar), (x.comp[0], x.comp[0]))


def rel_tau(x: RelObjectB) -> RelObjectB:
    return RelObjectB(x.functor, (x.src[1], x.src[0]), cx.tau(x.tar), (x.comp[1], x.comp[0]))


def is_diagonal_rel(x: RelObjectB) -> bool:
    return (cx.same_complex(x.src[0], x.src[1]) and cx.is_diagonal(x.tar)
            and all(x.comp[0].at(n) == x.comp[1].at(n) for n in _span(x.tar, *x.src)))


def same_rel(x: RelObject, y: RelObject) -> bool:
    """Equal objects, up to the stored support bounds."""
    return (type(x) is type(y) and x.functor == y.functor
            and all(cx.same_complex(a, b) for a, b in zip(x.src, y.src))
            and cx.same_complex(x.tar, y.tar)
            and all(cx.same_map(u, v) for u, v in zip(x.comp, y.comp)))


def _same_kind(x: RelObject, tar, src, comp):
    return type(x)(x.functor, tuple(src), tar, tuple(comp))


def shift_rel(x: RelObject, i: int) -> RelObject:
    """Componentwise shift ``(M[i], N[i], u[i])``."""
    if i == 0:
        return x
    return _same_kind(x, cx.shift(x.tar, i), [cx.shift(s, i) for s in x.src],
                      [{n - i: m for n, m in u.maps} for u in x.comp])


def direct_sum_rel(a: RelObject, b: RelObject) -> RelObject:
    if a.functor != b.functor:
        raise PairMismatch(f"{a.functor.name} vs {b.functor.name}")
    if type(a) is not type(b):
        raise PairMismatch("direct sum of objects of different categories")
    src = [cx.direct_sum(s, t) for s, t in zip(a.src, b.src)]
    tar = cx.direct_sum(a.tar, b.tar)
    comp = [_sum_comp(a, b, k, src[k], tar) for k in range(a.arity)]
    return _same_kind(a, tar, src, comp)


def _sum_comp(a, b, k, src_k, tar):
    """``u_a + u_b`` as a map ``F(src_a + src_b) -> tar_a + tar_b`` degreewise."""
    ring = a.ring
    fsrc = a.functor(src_k)
    out = {}
    for n in _span(fsrc, tar):
        ua, ub = a.comp[k].at(n), b.comp[k].at(n)
        out[n] = block_diag(ring, [ua, ub])
    return out


def direct_sum_rel_all(objs: Sequence[RelObject], functor: FunctorSpec | None = None,
                       binary: bool = True) -> RelObject:
    out = None
    for o in objs:
        out = o if out is None else direct_sum_rel(out, o)
    if out is None:
        return zero_rel(functor, binary)
    return out


def difference_as_single_generator(a: RelObjectB, b: RelObjectB) -> RelObjectB:
    """One object whose class is ``[a] - [b]``: ``a + b[1]``."""
    if a.functor != b.functor:
        raise PairMismatch(f"{a.functor.name} vs {b.functor.name}")
    return direct_sum_rel(a, shift_rel(b, 1))


# -- morphisms ---------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class RelMap:
    """``(f_src, f_tar)`` with one source map per source component and one
    target map per target side (top and bottom for ``B[F]``).

    A morphism of ``B[F]`` has equal top and bottom target maps; unequal ones
    are allowed so that maps of ``C[F^2]`` can be formed as well.
    """
    source: RelObject
    target: RelObject
    f_src: tuple
    f_tar: tuple

    def __post_init__(self):
        s, t = self.source, self.target
        if s.functor != t.functor or s.arity != t.arity:
            raise PairMismatch("map between objects over different pairs")
        f_src = tuple(self.f_src) if self.f_src else (None,) * s.arity
        f_src = tuple(_as_map(f, a, b) for f, a, b in zip(f_src, s.src, t.src))
        f_tar = _per_side(self.f_tar)
        if len(f_tar) == 1:
            f_tar = f_tar * s.arity
        f_tar = tuple(_as_map(f, s.tar_side(k), t.tar_side(k)) for k, f in enumerate(f_tar))
        object.__setattr__(self, "f_src", f_src)
        object.__setattr__(self, "f_tar", f_tar)

    @property
    def ring(self):
        return self.source.ring

    def tar_map(self) -> ChainMap:
        """The single target map (between binary complexes for ``B[F]``)."""
        return ChainMap(self.source.tar, self.target.tar, self.f_tar[0].maps)

    def __matmul__(self, other: "RelMap") -> "RelMap":
        return RelMap(other.source, self.target,
                      tuple(f @ g for f, g in zip(self.f_src, other.f_src)),
                      tuple(f @ g for f, g in zip(self.f_tar, other.f_tar)))

    def __add__(self, other: "RelMap") -> "RelMap":
        return RelMap(self.source, self.target,
                      tuple(f + g for f, g in zip(self.f_src, other.f_src)),
                      tuple(f + g for f, g in zip(self.f_tar, other.f_tar)))

    def __neg__(self):
        return RelMap(self.source, self.target, tuple(-f for f in self.f_src),
                      tuple(-f for f in self.f_tar))


PMorphism = RelMap


def rel_map(source: RelObject, target: RelObject, f_src, f_tar) -> RelMap:
    """``f_src``: one map (or dict) per source component; ``f_tar``: a single map
    used for every target side, or a tuple with one per side."""
    return RelMap(source, target, tuple(f_src), _per_side(f_tar))


def identity_rel(x: RelObject) -> RelMap:
    return RelMap(x, x, tuple(cx.identity_map(s) for s in x.src), (cx.identity_map(x.tar),))


def zero_rel_map(a: RelObject, b: RelObject) -> RelMap:
    return RelMap(a, b, (), ({},))


def rel_map_problems(f: RelMap, strict: bool = True) -> list[str]:
    out = []
    s, t = f.source, f.target
    F = s.functor
    for k, g in enumerate(f.f_src):
        if not cx.is_chain_map(g):
            out.append(f"source map {k} is not a chain map")
    for k, g in enumerate(f.f_tar):
        if not cx.is_chain_map(g):
            out.append(f"target map {k} is not a chain map")
    if strict and len(f.f_tar) == 2 and f.f_tar[0].maps != f.f_tar[1].maps:
        out.append("top and bottom target maps differ")
    for k in range(s.arity):
        left = t.comp[k] @ F.chain_map(f.f_src[k])
        right = f.f_tar[k] @ s.comp[k]
        if any(left.at(n) != right.at(n) for n in _span(left.source, left.target)):
            out.append(f"comparison square {k} does not commute")
    return out


def is_rel_morphism(f: RelMap, strict: bool = True) -> bool:
    return not rel_map_problems(f, strict)


def p_morphism_problems(f: RelMap) -> list[str]:
    out = rel_map_problems(f)
    if out:
        return out
    for k, g in enumerate(f.f_src):
        if not cx.is_quasi_iso(g):
            out.append(f"source map {k} is not a quasi-isomorphism")
    for k, g in enumerate(f.f_tar):
        if not cx.is_isomorphism(g):
            out.append(f"target map {k} is not an isomorphism")
    return out


def is_p_morphism(f: RelMap) -> bool:
    """Square commutes, the source maps are quasi-isomorphisms and the target
    map is an isomorphism."""
    return not p_morphism_problems(f)


# -- cones, sums, exact sequences ---------------------------------------------------------------------------

def rel_cone(f: RelMap) -> RelObject:
    """Componentwise mapping cone; the comparison is ``u_target + u_source[-1]``."""
    s, t = f.source, f.target
    src = [cx.mapping_cone(g) for g in f.f_src]
    if isinstance(t, RelObjectB):
        tar = cx.binary_cone(f.f_tar[0], f.f_tar[1])
    else:
        tar = cx.mapping_cone(f.f_tar[0])
    comp = []
    for k in range(s.arity):
        fs = s.functor(src[k])
        comp.append({n: block_diag(f.ring, [t.comp[k].at(n), s.comp[k].at(n - 1)])
                     for n in _span(fs, tar)})
    return _same_kind(t, tar, src, comp)


def rel_cone_inclusion(f: RelMap) -> RelMap:
    cone = rel_cone(f)
    return rel_map(f.target, cone, [cx.cone_inclusion(g).as_dict() for g in f.f_src],
                   cx.cone_inclusion(f.f_tar[0]).as_dict())


def rel_cone_projection(f: RelMap) -> RelMap:
    cone = rel_cone(f)
    return rel_map(cone, shift_rel(f.source, -1), [cx.cone_projection(g).as_dict() for g in f.f_src],
                   cx.cone_projection(f.f_tar[0]).as_dict())


def _components(x: RelObject) -> list[GradedObject]:
    return list(x.src) + [x.tar]


def _map_components(f: RelMap) -> list[ChainMap]:
    return list(f.f_src) + [f.f_tar[0]]


def injection(summands: Sequence[RelObject], k: int) -> RelMap:
    """The inclusion of the ``k``-th summand into their direct sum."""
    total = direct_sum_rel_all(summands)
    ring_s, ring_t = total.functor.source, total.functor.target
    maps = []
    for c in range(len(_components(total))):
        ring = ring_t if c == len(total.src) else ring_s
        comp_objs = [_components(x)[c] for x in summands]
        out = {}
        for n in _components(total)[c].degrees:
            dims = [o.dim(n) for o in comp_objs]
            blocks = [[Matrix.identity(ring, dims[k]) if i == k else None] for i in range(len(dims))]
            out[n] = block_matrix(ring, blocks, dims, [dims[k]])
        maps.append(out)
    return rel_map(summands[k], total, maps[:-1], maps[-1])


def projection(summands: Sequence[RelObject], k: int) -> RelMap:
    total = direct_sum_rel_all(summands)
    inj = injection(summands, k)
    return RelMap(total, summands[k], tuple({n: m.T for n, m in g.maps} for g in inj.f_src),
                  ({n: m.T for n, m in inj.f_tar[0].maps},))


def block_rel_map(rows: Sequence[Sequence[RelMap | None]], sources: Sequence[RelObject],
                  targets: Sequence[RelObject], functor: FunctorSpec | None = None) -> RelMap:
    """The map ``sum(sources) -> sum(targets)`` with the given blocks (None = 0)."""
    binary = isinstance((list(sources) + list(targets))[0], RelObjectB) if (sources or targets) else True
    s_tot = direct_sum_rel_all(sources, functor, binary)
    t_tot = direct_sum_rel_all(targets, functor, binary)
    entries = [(i, j, m) for i, row in enumerate(rows) for j, m in enumerate(row) if m is not None]

    def assemble(ring, pick, src_objs, tar_objs):
        out = {}
        degrees = set()
        for _, _, m in entries:
            degrees.update(n for n, _ in pick(m).maps)
        for n in sorted(degrees):
            blocks = [[None] * len(src_objs) for _ in tar_objs]
            for i, j, m in entries:
                a = pick(m).at(n)
                if not a.is_zero():
                    blocks[i][j] = a
            out[n] = block_matrix(ring, blocks, [o.dim(n) for o in tar_objs],
                                  [o.dim(n) for o in src_objs])
        return out

    ring_s, ring_t = s_tot.functor.source, s_tot.functor.target
    f_src = tuple(assemble(ring_s, lambda m, k=k: m.f_src[k],
                           [x.src[k] for x in sources], [y.src[k] for y in targets])
                  for k in range(s_tot.arity))
    f_tar = tuple(assemble(ring_t, lambda m, k=k: m.f_tar[k],
                           [x.tar_side(k) for x in sources], [y.tar_side(k) for y in targets])
                  for k in range(s_tot.arity))
    return RelMap(s_tot, t_tot, f_src, f_tar)


def is_exact_rel(a: RelMap, b: RelMap) -> bool:
    """Is ``0 -> A -> B -> C -> 0`` exact, componentwise and degreewise?"""
    if not (is_rel_morphism(a) and is_rel_morphism(b)):
        return False
    for fa, fb in zip(_map_components(a), _map_components(b)):
        for n in _span(fa.source, fa.target, fb.target):
            if not cx.is_exact_sequence(fa.ring, [fa.at(n), fb.at(n)]):
                return False
    return True


def rel_equal_maps(f: RelMap, g: RelMap) -> bool:
    return all(all(x.at(n) == y.at(n) for n in _span(x.source, x.target))
               for x, y in zip(_map_components(f), _map_components(g)))


# -- the maps of pairs ---------------------------------------------------------------------------------------------

PAIR_MAPS = ("1,F", "0,1", "1,0", "F,1")


def pair_map(which: str, x: RelObjectB, F: FunctorSpec) -> RelObjectB:
    """Push ``x`` along one of the maps of pairs

    ``[0 -> M] -(1,F)-> [0 -> N] -(0,1)-> [M -F-> N] -(1,0)-> [M -> 0] -(F,1)-> [N -> 0]``.
    """
    which = which.replace("(", "").replace(")", "").replace(" ", "")
    if which not in PAIR_MAPS:
        raise WrongPair(f"unknown map of pairs {which!r}")
    if F.source_is_zero or F.target_is_zero:
        raise WrongPair("the main functor must be a genuine functor")
    expected = {"1,F": ZeroSource(F.source), "0,1": ZeroSource(F.target),
                "1,0": F, "F,1": ZeroTarget(F.source)}[which]
    if x.functor != expected:
        raise WrongPair(f"({which}) expects an object over {expected.name}, got {x.functor.name}")
    if which == "1,F":
        G = ZeroSource(F.target)
        zs = cx.zero_complex(F.target)
        return rel_b(G, (zs, zs), F(x.tar))
    if which == "0,1":
        zs = cx.zero_complex(F.source)
        return rel_b(F, (zs, zs), x.tar)
    if which == "1,0":
        G = ZeroTarget(F.source)
        return rel_b(G, x.src, BinaryComplex(F.source, 0, ()))
    G = ZeroTarget(F.target)
    return rel_b(G, tuple(F(s) for s in x.src), BinaryComplex(F.target, 0, ()))


def class_of(x: RelObjectB):
    """The computable image of ``[x]``: a unit over ``0 -> N`` (through the
    torsion oracle), an integer over ``M -> 0`` (through Euler characteristics)."""
    from .torsion import cls
    if x.functor.source_is_zero:
        return cls(x.tar)
    if x.functor.target_is_zero:
        return cx.euler_char(x.src[0]) - cx.euler_char(x.src[1])
    raise WrongPair("no computable class for a general pair")


@dataclass(frozen=True)
class FormalClass:
    """A signed formal sum of generators; no rewriting is ever performed."""
    terms: tuple = ()

    @staticmethod
    def of(x: RelObjectB, sign: int = 1) -> "FormalClass":
        return FormalClass(((sign, x),))

    def __add__(self, other: "FormalClass") -> "FormalClass":
        return FormalClass(self.terms + other.terms)

    def __neg__(self):
        return FormalClass(tuple((-s, x) for s, x in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def evaluate(self):
        """Sum of the computable images (product of units, or sum of integers)."""
        out = None
        for s, x in self.terms:
            v = class_of(x)
            if isinstance(v, int):
                out = (out or 0) + s * v
            else:
                v = v if s > 0 else v.inverse()
                out = v if out is None else out * v
        return out


# -- functors on maps, truncation ------------------------------------------------------------------

def rel_top_map(f: RelMap) -> RelMap:
    return RelMap(rel_top(f.source), rel_top(f.target), (f.f_src[0],), (f.f_tar[0],))


def rel_bot_map(f: RelMap) -> RelMap:
    return RelMap(rel_bot(f.source), rel_bot(f.target), (f.f_src[1],), (f.f_tar[1],))


def rel_tau_map(f: RelMap) -> RelMap:
    return RelMap(rel_tau(f.source), rel_tau(f.target), (f.f_src[1], f.f_src[0]),
                  (f.f_tar[1], f.f_tar[0]))


def recast(f: RelMap, source: RelObject | None = None, target: RelObject | None = None) -> RelMap:
    """The same matrices, re-anchored on equal objects (e.g. re-bracketed sums)."""
    source, target = source or f.source, target or f.target
    if not (same_rel(source, f.source) and same_rel(target, f.target)):
        raise PairMismatch("recast between different objects")
    f_src = [{n: g.at(n) for n in _span(a, b)} for g, a, b in zip(f.f_src, source.src, target.src)]
    f_tar = tuple({n: g.at(n) for n in _span(source.tar, target.tar)} for g in f.f_tar)
    return RelMap(source, target, tuple(f_src), f_tar)


def _truncate(c, hi: int):
    """Degrees ``<= hi`` (a subcomplex, since differentials lower degree)."""
    if not c.dims or hi >= c.hi:
        return c
    if hi < c.lo:
        return _zero_like(c, c.ring)
    dims = c.dims[:hi - c.lo + 1]
    if isinstance(c, BinaryComplex):
        t, b = cx.top(c), cx.bot(c)
        return BinaryComplex(c.ring, c.lo, dims, {n: t.diff(n) for n in range(c.lo + 1, hi + 1)},
                             {n: b.diff(n) for n in range(c.lo + 1, hi + 1)})
    return ChainComplex(c.ring, c.lo, dims, {n: c.diff(n) for n in range(c.lo + 1, hi + 1)})


def truncate_rel(x: RelObject, hi: int) -> RelObject:
    src = [_truncate(s, hi) for s in x.src]
    tar = _truncate(x.tar, hi)
    comp = [{n: m for n, m in u.maps if n <= hi} for u in x.comp]
    return _same_kind(x, tar, src, comp)


def degree_piece_rel(x: RelObject, n: int) -> RelObject:
    """Degree ``n`` alone, with zero differentials."""
    src = [GradedObject(s.ring, n, (s.dim(n),)) for s in x.src]
    src = [ChainComplex(s.ring, s.lo, s.dims) for s in src]
    t = x.tar
    tar = (BinaryComplex(t.ring, n, (t.dim(n),)) if isinstance(t, BinaryComplex)
           else ChainComplex(t.ring, n, (t.dim(n),)))
    return _same_kind(x, tar, src, [{n: u.at(n)} for u in x.comp])


def inclusion_map(sub: RelObject, x: RelObject) -> RelMap:
    """Identity matrices from a truncation ``sub`` of ``x`` into ``x``."""
    def ident(a, b):
        return {n: Matrix.identity(a.ring, a.dim(n)) if a.dim(n) == b.dim(n)
                else Matrix.zeros(a.ring, b.dim(n), a.dim(n)) for n in a.degrees}
    return rel_map(sub, x, [ident(a, b) for a, b in zip(sub.src, x.src)], ident(sub.tar, x.tar))


def piece_projection(x: RelObject, n: int) -> RelMap:
    piece = degree_piece_rel(x, n)

    def proj(a, b):
        return {n: Matrix.identity(a.ring, a.dim(n))}
    return rel_map(x, piece, [proj(a, b) for a, b in zip(x.src, piece.src)], proj(x.tar, piece.tar))


# -- total objects of complexes of relative objects ------------------------------------------------------

def _block_diag_graded(ring, src_rows, tar_rows, maps, ilo, src_tot, tar_tot):
    """Degree ``n`` block diagonal of ``maps[i].at(n - i)``, rows in ascending ``i``."""
    out = {}
    idx = range(ilo, ilo + len(src_rows))
    for n in _span(src_tot, tar_tot):
        rd = [tar_rows[i - ilo].dim(n - i) for i in idx]
        cd = [src_rows[i - ilo].dim(n - i) for i in idx]
        blocks = [[maps[a].at(n - ilo - a) if a == b else None for b in range(len(cd))]
                  for a in range(len(rd))]
        out[n] = block_matrix(ring, blocks, rd, cd)
    return out


def _dicts(fam):
    return tuple(f.as_dict() for f in fam)


def tot_rel(ilo: int, objects: Sequence[RelObject], families: Sequence[Sequence[RelMap]]) -> RelObject:
    """Total object of a complex ``objects[0] <- objects[1] <- ...`` (outer degrees
    ``ilo, ilo+1, ...``), outer maps ``families[k]`` from degree ``ilo+k+1`` to
    ``ilo+k``: one family, or two (top, bottom) for a binary outer complex.

    Objects of ``B[F]`` with one family give an object of ``B[F]``; objects of
    ``C[F]`` with two families give the object of ``B[F]`` whose source pair is
    the total binary source complex; with one family an object of ``C[F]``.
    """
    objects = list(objects)
    F = objects[0].functor
    nfam = max((len(f) for f in families), default=1)
    families = [tuple(f) for f in families]
    binary_objects = isinstance(objects[0], RelObjectB)
    if binary_objects and nfam == 2:
        raise ValueError("binary outer complexes of B[F] objects are not needed here")

    def cc(rows, verticals):
        return cx.ComplexOfComplexes(ilo, tuple(rows), tuple(verticals))

    if binary_objects:
        src = []
        for k in (0, 1):
            src.append(cx.total_complex(cc([o.src[k] for o in objects],
                                          [f[0].f_src[k].as_dict() for f in families])))
        tar = cx.total_complex(cc([o.tar for o in objects], [f[0].f_tar[0].as_dict() for f in families]))
        comp = []
        for k in (0, 1):
            tar_side = cx.top(tar) if k == 0 else cx.bot(tar)
            comp.append(_block_diag_graded(F.target, [F(o.src[k]) for o in objects],
                                           [o.tar_side(k) for o in objects],
                                           [o.comp[k] for o in objects], ilo, F(src[k]), tar_side))
        return RelObjectB(F, tuple(src), tar, tuple(comp))
    fams_src = [tuple(g.f_src[0].as_dict() for g in f) for f in families]
    fams_tar = [tuple(g.f_tar[0].as_dict() for g in f) for f in families]
    src = cx.total_complex(cc([o.src[0] for o in objects], fams_src))
    tar = cx.total_complex(cc([o.tar for o in objects], fams_tar))
    if nfam == 1:
        comp = _block_diag_graded(F.target, [F(o.src[0]) for o in objects], [o.tar for o in objects],
                                  [o.comp[0] for o in objects], ilo, F(src), tar)
        return RelObjectC(F, (src,), tar, (comp,))
    src_pair = (cx.top(src), cx.bot(src))
    comp = [_block_diag_graded(F.target, [F(o.src[0]) for o in objects], [o.tar for o in objects],
                               [o.comp[0] for o in objects], ilo, F(s), tar)
            for s in src_pair]
    return RelObjectB(F, src_pair, tar, tuple(comp))


def tot_rel_map(ilo: int, sources: Sequence[RelObject], targets: Sequence[RelObject],
                maps: Sequence[RelMap], src_tot: RelObject, tar_tot: RelObject) -> RelMap:
    """Total map of outer-degreewise maps ``maps[k]: sources[k] -> targets[k]``."""
    f_src = []
    for k in range(src_tot.arity):
        f_src.append(_block_diag_graded(src_tot.functor.source, [s.src[k] for s in sources],
                                        [t.src[k] for t in targets], [m.f_src[k] for m in maps],
                                        ilo, src_tot.src[k], tar_tot.src[k]))
    f_tar = _block_diag_graded(src_tot.functor.target, [s.tar for s in sources],
                               [t.tar for t in targets], [m.f_tar[0] for m in maps],
                               ilo, src_tot.tar, tar_tot.tar)
    return rel_map(src_tot, tar_tot, f_src, f_tar)
