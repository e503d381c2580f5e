"""Checkable constructions behind the exactness and vanishing statements.

Each constructor returns a :class:`WitnessBundle`: the objects it built, the
short exact sequences it relies on (with their exactness recorded) and a list
of named boolean checks.  A bundle passes when every sequence is exact and
every check holds.  Nothing here is trusted: the checks recompute all
identities from the matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import complexes as cx
from . import relative as rel
from .complexes import BinaryComplex, ChainComplex, _span
from .fabricate import as_rng
from .matrix import Matrix, block_matrix, inverse, is_invertible, random_gl
from .relative import (FunctorSpec, RelMap, RelObject, RelObjectB, RelObjectC, WrongFunctor)
from .rings import Ring
from .torsion import cls, elementary_product_witness, product, NotFound


class UnequalClass(ValueError):
    pass


class ClassMismatch(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


class GradingIrreparable(ValueError):
    pass


# -- bundles --------------------------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SequenceRecord:
    """``0 -> A -> B -> C -> 0`` (or a longer exact sequence) with its maps."""
    name: str
    maps: tuple
    exact: bool


@dataclass
class WitnessBundle:
    kind: str
    objects: dict = field(default_factory=dict)
    sequences: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def check(self, name: str, passed, detail: str = "") -> bool:
        passed = bool(passed)
        self.checks.append(Check(name, passed, detail))
        return passed

    def sequence(self, name: str, maps, exact) -> bool:
        exact = bool(exact)
        self.sequences.append(SequenceRecord(name, tuple(maps), exact))
        return exact

    @property
    def passes(self) -> bool:
        return all(s.exact for s in self.sequences) and all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return ([f"sequence {s.name}" for s in self.sequences if not s.exact]
                + [c.name for c in self.checks if not c.passed])

    def all_checks(self) -> list[Check]:
        """Sequences (as exactness checks) followed by the named checks."""
        return ([Check(f"exact: {s.name}", s.exact) for s in self.sequences] + list(self.checks))

    def merge(self, other: "WitnessBundle", prefix: str) -> None:
        for s in other.sequences:
            self.sequences.append(SequenceRecord(f"{prefix}/{s.name}", s.maps, s.exact))
        for c in other.checks:
            self.checks.append(Check(f"{prefix}/{c.name}", c.passed, c.detail))
        for k, v in other.objects.items():
            self.objects[f"{prefix}/{k}"] = v


# -- coordinate filtrations ----------------------------------------------------------------------------------------

def _f_levels(F: FunctorSpec, levels: list[int]) -> list[int]:
    """Levels of the coordinates of ``F V`` (each coordinate becomes ``r`` of them)."""
    if F.target_is_zero:
        return []
    return [l for l in levels for _ in range(F.r)]


def _preserves(m: Matrix, lev_src: list[int], lev_tar: list[int]) -> bool:
    for i in range(m.rows):
        for j in range(m.cols):
            if m[i, j] != 0 and lev_tar[i] > lev_src[j]:
                return False
    return True


def _sub(m: Matrix, lev_src, lev_tar, l):
    return m.submatrix([i for i, x in enumerate(lev_tar) if x == l],
                       [j for j, x in enumerate(lev_src) if x == l])


def filtration_pieces(x: RelObject, levels: Callable[[int, int], list[int]]):
    """Subquotients of the filtration of ``x`` by coordinate levels.

    ``levels(k, n)`` lists a level for each coordinate of component ``k`` in
    degree ``n`` (``k < arity`` the sources, ``k == arity`` the target); the
    ``l``-th filtration step is spanned by coordinates of level ``<= l``.
    Returns ``(invariant, pieces)``: whether every differential and
    comparison respects the filtration, and the subquotient objects in
    ascending level.
    """
    F = x.functor
    comps = list(x.src) + [x.tar]
    span = _span(*comps)
    lev = {(k, n): list(levels(k, n)) for k in range(len(comps)) for n in span}
    for (k, n), l in lev.items():
        if len(l) != comps[k].dim(n):
            raise ValueError(f"component {k}, degree {n}: {len(l)} levels for dim {comps[k].dim(n)}")

    def diffs(c):
        if isinstance(c, BinaryComplex):
            return [cx.top(c), cx.bot(c)]
        return [c]

    invariant = True
    for k, c in enumerate(comps):
        for side in diffs(c):
            for n in span:
                if not _preserves(side.diff(n), lev[k, n], lev[k, n - 1] if (k, n - 1) in lev else []):
                    invariant = False
    tk = len(x.src)
    for k, u in enumerate(x.comp):
        for n in span:
            if not _preserves(u.at(n), _f_levels(F, lev[k, n]), lev[tk, n]):
                invariant = False
    all_levels = sorted({l for v in lev.values() for l in v})
    pieces = []
    for l in all_levels:
        def piece(k, c):
            dims = [sum(1 for x in lev[k, n] if x == l) for n in span]
            lo = span.start

            def d(side):
                return {n: _sub(side.diff(n), lev[k, n], lev.get((k, n - 1), []), l)
                        for n in span if n > lo}
            if isinstance(c, BinaryComplex):
                return BinaryComplex(c.ring, lo, tuple(dims), d(cx.top(c)), d(cx.bot(c)))
            return ChainComplex(c.ring, lo, tuple(dims), d(c))
        src = [piece(k, s) for k, s in enumerate(x.src)]
        tar = piece(tk, x.tar)
        comp = [{n: _sub(u.at(n), _f_levels(F, lev[k, n]), lev[tk, n], l) for n in span}
                for k, u in enumerate(x.comp)]
        pieces.append(rel._same_kind(x, tar, src, comp))
    return invariant, pieces


def degree_levels(x: RelObject):
    """The degreewise filtration: every coordinate of degree ``n`` has level ``n``."""
    comps = list(x.src) + [x.tar]
    return lambda k, n: [n] * comps[k].dim(n)


def cone_levels(x: RelObject):
    """For ``Cone(1_x)``: degree ``n`` is ``x_n + x_{n-1}``, at levels ``n`` and ``n - 1``."""
    comps = list(x.src) + [x.tar]
    return lambda k, n: [n] * comps[k].dim(n) + [n - 1] * comps[k].dim(n - 1)


def _piece_ok(p: RelObject, allow_acyclic_source: bool = False) -> bool:
    """Diagonal, or (if allowed) with acyclic sources and a diagonal target,
    i.e. p-equivalent to the diagonal ``(0, tar, 0)``."""
    if rel.validate_rel(p):
        return False
    if rel.is_diagonal_rel(p):
        return True
    return (allow_acyclic_source and all(cx.is_acyclic(s) for s in p.src)
            and cx.is_diagonal(p.tar))


def check_filtration(bundle: WitnessBundle, name: str, x: RelObject, levels,
                     allow_acyclic_source: bool = False) -> list[RelObject]:
    invariant, pieces = filtration_pieces(x, levels)
    bundle.check(f"{name}: filtration is preserved", invariant)
    bad = [i for i, p in enumerate(pieces) if not _piece_ok(p, allow_acyclic_source)]
    what = "diagonal or acyclic over a diagonal target" if allow_acyclic_source else "diagonal"
    bundle.check(f"{name}: subquotients are {what}", not bad,
                 f"{len(pieces)} pieces" + (f", bad {bad}" if bad else ""))
    return pieces


# -- exact categories for the K0 witness algebra -----------------------------------------------------------------

class MatrixCategory:
    """Finite free modules (objects are dimensions) and matrices."""

    def __init__(self, ring: Ring):
        self.ring = ring

    def zero(self):
        return 0

    def dsum(self, objs):
        return sum(objs)

    def identity(self, x):
        return Matrix.identity(self.ring, x)

    def zero_map(self, a, b):
        return Matrix.zeros(self.ring, b, a)

    def compose(self, g, f):
        return g @ f

    def block(self, rows, sources, targets):
        return block_matrix(self.ring, rows, list(targets), list(sources))

    def inj(self, summands, k):
        return self.block([[self.identity(summands[k]) if i == k else None] for i in range(len(summands))],
                          [summands[k]], summands)

    def is_exact(self, a, b):
        return cx.is_exact_sequence(self.ring, [a, b])

    def recast(self, f, source=None, target=None):
        if source is not None and f.cols != source or target is not None and f.rows != target:
            raise ValueError("recast between different objects")
        return f

    def equal(self, x, y):
        return x == y

    def source_of(self, f):
        return f.cols


class RelCategory:
    """Objects of ``B[F]`` and their (strict) morphisms."""

    def __init__(self, functor: FunctorSpec):
        self.functor = functor

    def zero(self):
        return rel.zero_rel(self.functor)

    def dsum(self, objs):
        return rel.direct_sum_rel_all(list(objs), self.functor)

    def identity(self, x):
        return rel.identity_rel(x)

    def zero_map(self, a, b):
        return rel.zero_rel_map(a, b)

    def compose(self, g, f):
        return g @ f

    def block(self, rows, sources, targets):
        return rel.block_rel_map(rows, sources, targets, self.functor)

    def inj(self, summands, k):
        return rel.injection(list(summands), k)

    def is_exact(self, a, b):
        return rel.is_exact_rel(a, b)

    def recast(self, f, source=None, target=None):
        return rel.recast(f, source, target)

    def equal(self, x, y):
        return rel.same_rel(x, y)

    def source_of(self, f):
        return f.source


@dataclass
class K0Witness:
    """``left ~ right``: exact ``0 -> left + V0 -a-> V1 -b-> V2 -> 0`` and
    ``0 -> right + V0 -a2-> V1 -b2-> V2 -> 0``, so ``[left] = [right]`` in K0."""
    left: object
    right: object
    V0: object
    V1: object
    V2: object
    a: object
    b: object
    a2: object
    b2: object

    def problems(self, cat) -> list[str]:
        out = []
        if not cat.equal(cat.source_of(self.a), cat.dsum([self.left, self.V0])):
            out.append("a does not start at left + V0")
        if not cat.equal(cat.source_of(self.a2), cat.dsum([self.right, self.V0])):
            out.append("a2 does not start at right + V0")
        if not cat.is_exact(self.a, self.b):
            out.append("first sequence is not exact")
        if not cat.is_exact(self.a2, self.b2):
            out.append("second sequence is not exact")
        return out


def w_refl(cat, x) -> K0Witness:
    z = cat.zero()
    a = cat.block([[cat.identity(x), None]], [x, z], [x])
    return K0Witness(x, x, z, x, z, a, cat.zero_map(x, z), a, cat.zero_map(x, z))


def w_sym(w: K0Witness) -> K0Witness:
    return K0Witness(w.right, w.left, w.V0, w.V1, w.V2, w.a2, w.b2, w.a, w.b)


def w_from_ses(cat, i, p, A, B, C) -> K0Witness:
    """``B ~ A + C`` from ``0 -> A -i-> B -p-> C -> 0``:
    ``0 -> B -> B + C -> C -> 0`` against ``0 -> A + C -> B + C -> C -> 0``."""
    z = cat.zero()
    V1 = cat.dsum([B, C])
    a = cat.block([[cat.identity(B), None], [None, None]], [B, z], [B, C])
    b = cat.block([[None, cat.identity(C)]], [B, C], [C])
    a2 = cat.block([[i, None, None], [None, cat.identity(C), None]], [A, C, z], [B, C])
    a2 = cat.recast(a2, cat.dsum([cat.dsum([A, C]), z]))
    b2 = cat.block([[p, None]], [B, C], [C])
    return K0Witness(B, cat.dsum([A, C]), z, V1, C, a, b, a2, b2)


def _restrict(cat, f, summands, k):
    return cat.compose(f, cat.inj(summands, k))


def w_add(cat, w1: K0Witness, w2: K0Witness) -> K0Witness:
    V0 = cat.dsum([w1.V0, w2.V0])
    V1 = cat.dsum([w1.V1, w2.V1])
    V2 = cat.dsum([w1.V2, w2.V2])

    def side(x1, x2, a1, a2):
        s1, s2 = [x1, w1.V0], [x2, w2.V0]
        m = cat.block([[_restrict(cat, a1, s1, 0), None, _restrict(cat, a1, s1, 1), None],
                       [None, _restrict(cat, a2, s2, 0), None, _restrict(cat, a2, s2, 1)]],
                      [x1, x2, w1.V0, w2.V0], [w1.V1, w2.V1])
        return cat.recast(m, cat.dsum([cat.dsum([x1, x2]), V0]))

    b = cat.block([[w1.b, None], [None, w2.b]], [w1.V1, w2.V1], [w1.V2, w2.V2])
    b2 = cat.block([[w1.b2, None], [None, w2.b2]], [w1.V1, w2.V1], [w1.V2, w2.V2])
    return K0Witness(cat.dsum([w1.left, w2.left]), cat.dsum([w1.right, w2.right]), V0, V1, V2,
                     side(w1.left, w2.left, w1.a, w2.a), b,
                     side(w1.right, w2.right, w1.a2, w2.a2), b2)


def w_iso_right(cat, w: K0Witness, y, phi) -> K0Witness:
    """Replace the right side by ``y`` along an isomorphism ``phi: y -> right``."""
    m = cat.block([[phi, None], [None, cat.identity(w.V0)]], [y, w.V0], [w.right, w.V0])
    m = cat.recast(m, cat.dsum([y, w.V0]), cat.dsum([w.right, w.V0]))
    return K0Witness(w.left, y, w.V0, w.V1, w.V2, w.a, w.b, cat.compose(w.a2, m), w.b2)


def w_trans(cat, w1: K0Witness, w2: K0Witness) -> K0Witness:
    """``A ~ B`` and ``B ~ C`` give ``A ~ C``: add, swap, then move ``B`` into ``V0``."""
    if not cat.equal(w1.right, w2.left):
        raise ValueError("w_trans: the middle objects differ")
    A, B, C = w1.left, w1.right, w2.right
    s = w_add(cat, w1, w2)                      # A + B ~ B + C
    swap = cat.block([[None, cat.identity(B), None], [cat.identity(C), None, None],
                      [None, None, cat.identity(s.V0)]], [C, B, s.V0], [B, C, s.V0])
    swap = cat.recast(swap, cat.dsum([cat.dsum([C, B]), s.V0]), cat.dsum([cat.dsum([B, C]), s.V0]))
    a2 = cat.compose(s.a2, swap)                # (C + B) + V0 -> V1
    V0 = cat.dsum([B, s.V0])
    a = cat.recast(s.a, cat.dsum([A, V0]))
    a2 = cat.recast(a2, cat.dsum([C, V0]))
    return K0Witness(A, C, V0, s.V1, s.V2, a, s.b, a2, s.b2)


# -- K0 witnesses over finite free modules -----------------------------------------------------------------

def k0_witness_verify(ring: Ring, m: int, m2: int, V0: int, V1: int, V2: int,
                      a: Matrix, b: Matrix, a2: Matrix, b2: Matrix) -> WitnessBundle:
    w = K0Witness(m, m2, V0, V1, V2, a, b, a2, b2)
    bundle = WitnessBundle("k0", {"witness": w})
    bundle.check("a: M + V0 -> V1", a.shape == (V1, m + V0))
    bundle.check("b: V1 -> V2", b.shape == (V2, V1))
    bundle.check("a': M' + V0 -> V1", a2.shape == (V1, m2 + V0))
    bundle.check("b': V1 -> V2", b2.shape == (V2, V1))
    shapes = all(c.passed for c in bundle.checks)
    bundle.sequence("E", (a, b), shapes and cx.is_exact_sequence(ring, [a, b]))
    bundle.sequence("E'", (a2, b2), shapes and cx.is_exact_sequence(ring, [a2, b2]))
    return bundle


def _random_witness(ring: Ring, m: int, m2: int, rng) -> K0Witness:
    v0, v2 = rng.randint(0, 2), rng.randint(0, 2)
    v1 = m + v0 + v2
    out = []
    for x in (m, m2):
        P = random_gl(ring, v1, rng)
        Pinv = inverse(P)
        a = P.submatrix(range(v1), range(x + v0))
        b = Pinv.submatrix(range(x + v0, v1), range(v1))
        out.append((a, b))
    (a, b), (a2, b2) = out
    return K0Witness(m, m2, v0, v1, v2, a, b, a2, b2)


def k0_witness_construct(ring: Ring, m: int, m2: int, seed=None) -> WitnessBundle:
    """A witness for ``[M] = [M']`` (free modules of ranks ``m``, ``m2``) and the
    five-term sequences derived from it.

    Without a seed the canonical witness (``V1 = M``, identity maps) is used;
    with a seed the middle terms are conjugated by random invertible matrices.
    """
    if m != m2:
        raise UnequalClass(f"rank {m} != rank {m2}: the classes differ")
    if seed is None:
        w = K0Witness(m, m2, 0, m, 0, Matrix.identity(ring, m), Matrix.zeros(ring, 0, m),
                      Matrix.identity(ring, m), Matrix.zeros(ring, 0, m))
    else:
        w = _random_witness(ring, m, m2, as_rng(seed))
    bundle = k0_witness_verify(ring, m, m2, w.V0, w.V1, w.V2, w.a, w.b, w.a2, w.b2)
    five = five_term(ring, w)
    bundle.objects.update(five)
    bundle.sequence("0 -> M -> M' + M + V0 -> V1 -> V2 -> 0", five["E5"],
                    cx.is_exact_sequence(ring, list(five["E5"])))
    bundle.sequence("0 -> M' -> M' + M + V0 -> V1 -> V2 -> 0", five["E5'"],
                    cx.is_exact_sequence(ring, list(five["E5'"])))
    return bundle


def five_term(ring: Ring, w: K0Witness) -> dict:
    """Both sequences with the common middle term ``W = M' + M + V0``.

    ``M`` enters ``W`` as the second summand and ``W -> V1`` uses ``a2`` on
    ``M' + V0``; ``M'`` enters as the first summand and ``W -> V1`` uses ``a``
    on ``M + V0``.
    """
    m, m2, v0 = w.left, w.right, w.V0
    W = m2 + m + v0
    cat = MatrixCategory(ring)
    inc_m = cat.inj([m2, m, v0], 1)
    inc_m2 = cat.inj([m2, m, v0], 0)
    a2_m2 = w.a2.submatrix(range(w.V1), range(m2))
    a2_v0 = w.a2.submatrix(range(w.V1), range(m2, m2 + v0))
    a_m = w.a.submatrix(range(w.V1), range(m))
    a_v0 = w.a.submatrix(range(w.V1), range(m, m + v0))
    alpha = cat.block([[a2_m2, None, a2_v0]], [m2, m, v0], [w.V1])
    alpha2 = cat.block([[None, a_m, a_v0]], [m2, m, v0], [w.V1])
    return {"W": W, "E5": (inc_m, alpha, w.b2), "E5'": (inc_m2, alpha2, w.b)}


def ses_witness(ring: Ring, i: Matrix, p: Matrix) -> WitnessBundle:
    """``[B] = [A] + [C]`` from ``0 -> A -i-> B -p-> C -> 0``."""
    cat = MatrixCategory(ring)
    A, B, C = i.cols, i.rows, p.rows
    bundle = WitnessBundle("k0-ses")
    bundle.sequence("0 -> A -> B -> C -> 0", (i, p), p.cols == B and cx.is_exact_sequence(ring, [i, p]))
    w = w_from_ses(cat, i, p, A, B, C)
    bundle.objects["witness"] = w
    bundle.check("witness sequences are exact", not w.problems(cat))
    return bundle


# -- helpers on relative objects ------------------------------------------------------------------------

def _identity_dict(c) -> dict:
    return {n: Matrix.identity(c.ring, c.dim(n)) for n in c.degrees}


def _sides(b: BinaryComplex):
    return cx.top(b), cx.bot(b)


def _genuine(F: FunctorSpec) -> None:
    if F.source_is_zero or F.target_is_zero:
        raise WrongFunctor(f"{F.name} is not a functor between nonzero categories")


def tautological_object(N: BinaryComplex, F: FunctorSpec) -> RelObjectB:
    """``((top N, bot N), N, (1, 1))`` for the identity functor."""
    return rel.rel_b(F, _sides(N), N, (_identity_dict(N), _identity_dict(N)))


def _degree_pieces(bundle, name, y):
    return check_filtration(bundle, name, y, degree_levels(y))


# -- reduction to a tautological object --------------------------------------------------------------

def part0_reduction(x: RelObjectB) -> WitnessBundle:
    """For the identity functor: the p-morphism ``(u, 1): x -> ((top N, bot N), N, 1)``
    and the degreewise filtration of the target, whose pieces are diagonal."""
    F = x.functor
    if F.kind != "identity":
        raise WrongFunctor(f"the reduction needs the identity functor, got {F.name}")
    bundle = WitnessBundle("part0", {"x": x})
    bundle.check("x is a valid object", not rel.validate_rel(x), "; ".join(rel.validate_rel(x)))
    N = x.tar
    Y = tautological_object(N, F)
    bundle.objects["Y"] = Y
    bundle.check("Y is a valid object", not rel.validate_rel(Y))
    f = rel.rel_map(x, Y, [u.as_dict() for u in x.comp], _identity_dict(N))
    bundle.objects["p-morphism"] = f
    probs = rel.p_morphism_problems(f)
    bundle.check("(u, 1) is a p-morphism", not probs, "; ".join(probs))
    bundle.objects["pieces"] = _degree_pieces(bundle, "Y", Y)
    return bundle


# -- lifting a class with vanishing image ---------------------------------------------------------------

def part1_construct(F: FunctorSpec, m: int, m2: int, seed=None) -> WitnessBundle:
    """``[M] - [M']`` with ``[FM] = [FM']``: an object ``((M, M'), N, (u, u'))``
    of ``B[F]`` built from the five-term sequences of a K0 witness, with ``N``
    in degrees ``0, -1, -2``."""
    _genuine(F)
    S, T = F.source, F.target
    fm, fm2 = F.dim(m), F.dim(m2)
    if fm != fm2:
        raise ClassMismatch(f"[F M] = {fm} differs from [F M'] = {fm2}")
    wb = k0_witness_construct(T, fm, fm2, seed)
    bundle = WitnessBundle("part1")
    bundle.merge(wb, "witness")
    inc, alpha, b2 = wb.objects["E5"]
    inc2, alpha2, b = wb.objects["E5'"]
    w = wb.objects["witness"]
    dims = (w.V2, w.V1, wb.objects["W"])
    N = cx.binary(T, -2, dims, [b2, alpha], [b, alpha2])
    M, M2 = cx.concentrated(S, 0, m), cx.concentrated(S, 0, m2)
    x = rel.rel_b(F, (M, M2), N, ({0: inc}, {0: inc2}))
    bundle.objects.update({"N": N, "x": x})
    bundle.check("x is a valid object", not rel.validate_rel(x), "; ".join(rel.validate_rel(x)))
    image = rel.class_of(rel.pair_map("1,0", x, F))
    bundle.check("image of [x] is [M] - [M']", image == m - m2, f"{image} vs {m - m2}")
    return bundle


# -- exactness at the relative group ------------------------------------------------------------------------

def _transport(x: RelObjectB, iso: dict) -> tuple[RelObjectB, RelMap]:
    """Replace the second source by its conjugate along ``iso`` (``phi_n``)."""
    F = x.functor
    M2 = x.src[1]
    phis = {n: iso.get(n, Matrix.identity(M2.ring, M2.dim(n))) for n in M2.degrees}
    invs = {n: inverse(p) for n, p in phis.items()}
    new = cx.ChainComplex(M2.ring, M2.lo, M2.dims,
                          {n: phis[n - 1] @ M2.diff(n) @ invs[n] for n in range(M2.lo + 1, M2.hi + 1)})
    u2 = {n: x.comp[1].at(n) @ F.matrix(invs[n]) for n in M2.degrees}
    y = rel.rel_b(F, (x.src[0], new), x.tar, (x.comp[0].as_dict(), u2))
    phi = rel.rel_map(x, y, [_identity_dict(x.src[0]), phis], _identity_dict(x.tar))
    return y, phi


def part2_construct(x: RelObjectB, iso: dict | None = None) -> WitnessBundle:
    """``x`` with ``[M1] = [M2]`` is equivalent to ``(0, Cone'(u), 0)``.

    ``L`` is the binary complex on the common grading of the sources, ``Y``
    the cone of ``(1, u): (M, FL, 1) -> x``; the sequences
    ``0 -> x -> Y -> (M, FL, 1)[-1] -> 0`` and
    ``0 -> (0, Cone'(u), 0) -> Y -> (Cone(1_M), 0, 0) -> 0`` are exact and the
    outer terms are filtered with diagonal subquotients.
    """
    F = x.functor
    _genuine(F)
    M1, M2 = x.src
    if cx.euler_char(M1) != cx.euler_char(M2):
        raise PreconditionFailed("the sources have different Euler characteristics")
    if not M1.same_grading(M2):
        raise GradingIrreparable("the sources are not isomorphic as graded objects")
    bundle = WitnessBundle("part2", {"x": x})
    bundle.check("x is a valid object", not rel.validate_rel(x), "; ".join(rel.validate_rel(x)))
    if iso:
        x, phi = _transport(x, iso)
        bundle.objects["repaired"] = x
        bundle.check("the repair is an isomorphism", rel.is_p_morphism(phi)
                     and all(cx.is_isomorphism(g) for g in phi.f_src))
    M1, M2 = x.src
    lo, hi = _span(M1, M2).start, _span(M1, M2).stop - 1
    M1, M2 = cx.regrade(M1, lo, hi), cx.regrade(M2, lo, hi)
    L = cx.make_binary(M1, M2)
    FL = F(L)
    S = rel.rel_b(F, (M1, M2), FL, (_identity_dict(FL), _identity_dict(FL)))
    u1, u2 = (u.as_dict() for u in x.comp)
    g = rel.RelMap(S, x, (_identity_dict(M1), _identity_dict(M2)), (u1, u2))
    bundle.check("(1, u) is a map of C[F^2]", rel.is_rel_morphism(g, strict=False))
    Y = rel.rel_cone(g)
    cone_u = Y.tar
    W = rel.shift_rel(S, -1)
    bundle.objects.update({"L": L, "Y": Y, "Cone'(u)": cone_u, "W": W})
    bundle.check("top and bottom of Cone'(u) are the cones of u1, u2",
                 cx.same_complex(cx.top(cone_u), cx.mapping_cone(g.f_tar[0]))
                 and cx.same_complex(cx.bot(cone_u), cx.mapping_cone(g.f_tar[1])))
    bundle.check("Cone'(u) is acyclic", cx.is_acyclic(cone_u))
    bundle.check("Y is a valid object", not rel.validate_rel(Y))
    i1, p1 = rel.rel_cone_inclusion(g), rel.rel_cone_projection(g)
    bundle.sequence("0 -> x -> Y -> (M, FL, 1)[-1] -> 0", (i1, p1), rel.is_exact_rel(i1, p1))
    T = F.target
    zs = cx.zero_complex(F.source)
    Z0 = rel.rel_b(F, (zs, zs), cone_u)
    Z = rel.rel_b(F, Y.src, BinaryComplex(T, 0, ()))
    bundle.objects.update({"(0, Cone'(u), 0)": Z0, "(Cone(1_M), 0, 0)": Z})
    bundle.check("(0, Cone'(u), 0) is a valid object", not rel.validate_rel(Z0))
    bundle.check("(Cone(1_M), 0, 0) is a valid object", not rel.validate_rel(Z))
    i2 = rel.rel_map(Z0, Y, [{}, {}], _identity_dict(cone_u))
    p2 = rel.rel_map(Y, Z, [_identity_dict(s) for s in Y.src], {})
    bundle.sequence("0 -> (0, Cone'(u), 0) -> Y -> (Cone(1_M), 0, 0) -> 0", (i2, p2),
                    rel.is_exact_rel(i2, p2))
    _degree_pieces(bundle, "(M, FL, 1)[-1]", W)
    srcs = (M1, M2)

    def z_levels(k, n):
        if k == 2:
            return []
        return [n] * srcs[k].dim(n) + [n - 1] * srcs[k].dim(n - 1)
    check_filtration(bundle, "(Cone(1_M), 0, 0)", Z, z_levels)
    pre = rel.rel_b(rel.ZeroSource(T), (cx.zero_complex(T),) * 2, cone_u)
    bundle.objects["preimage"] = pre
    bundle.check("(0,1) sends the preimage to (0, Cone'(u), 0)",
                 rel.same_rel(rel.pair_map("0,1", pre, F), Z0))
    return bundle


# -- the shift acts as the inverse ------------------------------------------------------------------------

def k0omegashift_witness(x: RelObject) -> WitnessBundle:
    """``0 -> x -> Cone(1_x) -> x[-1] -> 0`` with ``Cone(1_x)`` filtered so that
    every subquotient is diagonal (or acyclic over a diagonal target)."""
    bundle = WitnessBundle("shift", {"x": x})
    probs = rel.validate_rel(x)
    bundle.check("x is a valid object", not probs, "; ".join(probs))
    one = rel.identity_rel(x)
    C = rel.rel_cone(one)
    bundle.objects["Cone(1_x)"] = C
    i, p = rel.rel_cone_inclusion(one), rel.rel_cone_projection(one)
    bundle.sequence("0 -> x -> Cone(1_x) -> x[-1] -> 0", (i, p), rel.is_exact_rel(i, p))
    check_filtration(bundle, "Cone(1_x)", C, cone_levels(x), allow_acyclic_source=True)
    if x.functor.source_is_zero and isinstance(x, RelObjectB) and not probs:
        a, b = cls(x.tar), cls(rel.shift_rel(x, -1).tar)
        bundle.check("cls(x[-1]) = cls(x)^-1", (a * b).is_one(), f"{a} * {b}")
    return bundle


# -- composites of adjacent maps of pairs ----------------------------------------------------------------

COMPOSITES = ("(1,F)->(0,1)", "(0,1)->(1,0)", "(1,0)->(F,1)")


def composite_certificate(which: str, x: RelObjectB, F: FunctorSpec) -> WitnessBundle:
    """The image of ``x`` under two adjacent maps of pairs, with a certificate
    that its class vanishes."""
    which = which.replace(" ", "")
    if which not in COMPOSITES:
        raise rel.WrongPair(f"unknown composite {which!r}")
    first, second = (w.strip("()") for w in which.split("->"))
    bundle = WitnessBundle("composite", {"x": x})
    bundle.check("x is a valid object", not rel.validate_rel(x))
    z = rel.pair_map(second, rel.pair_map(first, x, F), F)
    bundle.objects["image"] = z
    bundle.check("image is a valid object", not rel.validate_rel(z))
    if which == "(1,F)->(0,1)":
        K = x.tar
        Y = rel.rel_b(F, _sides(K), F(K), (_identity_dict(F(K)),) * 2)
        f = rel.rel_map(z, Y, [{}, {}], _identity_dict(F(K)))
        probs = rel.p_morphism_problems(f)
        bundle.check("(0, 1): image -> ((top K, bot K), FK, 1) is a p-morphism", not probs,
                     "; ".join(probs))
        bundle.objects["Y"] = Y
        _degree_pieces(bundle, "((top K, bot K), FK, 1)", Y)
    elif which == "(0,1)->(1,0)":
        bundle.check("image is the zero object", all(s.total_dim() == 0 for s in z.src)
                     and z.tar.total_dim() == 0)
    else:
        N = x.tar
        G = z.functor
        Y = rel.rel_b(G, _sides(N), BinaryComplex(F.target, 0, ()))
        f = rel.rel_map(z, Y, [u.as_dict() for u in x.comp], {})
        probs = rel.p_morphism_problems(f)
        bundle.check("(u, 0): image -> ((top N, bot N), 0, 0) is a p-morphism", not probs,
                     "; ".join(probs))
        bundle.objects["Y"] = Y
        _degree_pieces(bundle, "((top N, bot N), 0, 0)", Y)
    if z.functor.source_is_zero or z.functor.target_is_zero:
        value = rel.class_of(z)
        zero = value == 0 if z.functor.target_is_zero else value.is_one()
        bundle.check("numeric class of the image is trivial", zero, str(value))
    return bundle


# -- the total object of a binary complex in C[F] --------------------------------------------------------------

def totbcf_check(ilo: int, rows: Sequence[RelObjectC], top_maps: Sequence[RelMap],
                 bot_maps: Sequence[RelMap]) -> WitnessBundle:
    """For a binary complex ``E`` of objects of ``C[F]`` (outer degrees
    ``ilo, ilo+1, ...``) with acyclic total source and target:
    ``cls(Tot E_tar) = F(cls(Tot E_src))``.

    The certificate is the cone of the total comparison, filtered by outer
    degree with diagonal subquotients (the cones of the column comparisons).
    """
    rows = list(rows)
    F = rows[0].functor
    _genuine(F)
    bundle = WitnessBundle("totbcf", {"rows": rows})
    bad = [i for i, r in enumerate(rows) if rel.validate_rel(r)]
    bundle.check("each column is an object of C[F]", not bad, f"invalid columns {bad}" if bad else "")
    maps_ok = all(rel.is_rel_morphism(f) for f in list(top_maps) + list(bot_maps))
    bundle.check("outer maps are morphisms of C[F]", maps_ok)
    fams = [(t, b) for t, b in zip(top_maps, bot_maps)]
    tot = rel.tot_rel(ilo, rows, fams)
    S = cx.make_binary(*tot.src)
    bundle.objects.update({"Tot E": tot, "Tot E_src": S, "Tot E_tar": tot.tar})
    src_ok, tar_ok = cx.is_acyclic(S), cx.is_acyclic(tot.tar)
    bundle.check("Tot E_src is acyclic", src_ok)
    bundle.check("Tot E_tar is acyclic", tar_ok)
    bundle.check("Tot E is a valid object", not rel.validate_rel(tot))
    cone = cx.binary_cone(tot.comp[0], tot.comp[1])
    bundle.objects["Cone(Tot u)"] = cone
    bundle.check("Cone(Tot u) is acyclic", cx.is_acyclic(cone))
    T = F.target
    wrapped = rel.rel_b(rel.ZeroSource(T), (cx.zero_complex(T),) * 2, cone)

    def levels(k, n):
        if k < 2:
            return []
        out = []
        for i, r in enumerate(rows):
            out += [ilo + i] * r.tar.dim(n - ilo - i)
        for i, r in enumerate(rows):
            out += [ilo + i] * F.dim(r.src[0].dim(n - 1 - ilo - i))
        return out
    check_filtration(bundle, "Cone(Tot u) by outer degree", wrapped, levels)
    if src_ok and tar_ok:
        c_tar, c_src = cls(tot.tar), cls(S)
        bundle.objects.update({"cls(Tot E_tar)": c_tar, "cls(Tot E_src)": c_src})
        bundle.check("cls(Tot E_tar) = F(cls(Tot E_src))", c_tar == F.unit(c_src),
                     f"{c_tar} vs F({c_src}) = {F.unit(c_src)}")
        bundle.check("cls(Cone(Tot u)) = 1", cls(cone).is_one())
    return bundle


def totbcf_fabricate(F: FunctorSpec, seed=None):
    """``E = A(alpha)``: ``X -alpha-> X`` on top, ``X -1-> X`` below, where
    ``X = (M, FM + P, inclusion)`` and ``alpha = (phi, F phi + psi)``."""
    from .fabricate import random_complex_with_automorphism, random_acyclic
    _genuine(F)
    rng = as_rng(seed)
    M, phi = random_complex_with_automorphism(F.source, rng)
    P, psi = random_complex_with_automorphism(F.target, rng, homology=False, lo=M.lo)
    FM = F(M)
    N = cx.direct_sum(FM, P)
    span = _span(FM, N)
    incl = {n: block_matrix(F.target, [[Matrix.identity(F.target, FM.dim(n))], [None]],
                            [FM.dim(n), P.dim(n)], [FM.dim(n)]) for n in span}
    X = rel.rel_c(F, M, N, incl)
    Fphi = F.chain_map(phi)
    tar = {n: block_matrix(F.target, [[Fphi.at(n), None], [None, psi.at(n)]],
                           [FM.dim(n), P.dim(n)], [FM.dim(n), P.dim(n)]) for n in span}
    alpha = rel.rel_map(X, X, [phi], tar)
    return 0, [X, X], [alpha], [rel.identity_rel(X)]


# -- exactness at the relative group of the identity pair --------------------------------------------------------

@dataclass
class Part3Input:
    """Objects of ``B[F]`` with exact ``Q: 0 -> N + C + D + V0 -a-> V1 -b-> V2 -> 0``
    and ``Q'`` the same with primes.  ``N, N'`` have zero source, ``C, C'`` are
    cones of p-morphisms (``cone_maps``), ``D, D'`` are diagonal."""
    functor: FunctorSpec
    N: RelObjectB
    C: RelObjectB
    D: RelObjectB
    N2: RelObjectB
    C2: RelObjectB
    D2: RelObjectB
    V0: RelObjectB
    V1: RelObjectB
    V2: RelObjectB
    a: RelMap
    b: RelMap
    a2: RelMap
    b2: RelMap
    cone_maps: tuple = ()


def w_iso_left(cat, w: K0Witness, y, phi) -> K0Witness:
    """Replace the left side by ``y`` along an isomorphism ``phi: y -> left``."""
    return w_sym(w_iso_right(cat, w_sym(w), y, phi))


def w_cancel(cat, w: K0Witness, A, B, Z) -> K0Witness:
    """``A + Z ~ B + Z`` gives ``A ~ B``, with ``Z`` moved into ``V0``."""
    if not (cat.equal(w.left, cat.dsum([A, Z])) and cat.equal(w.right, cat.dsum([B, Z]))):
        raise ValueError("w_cancel: sides are not of the form A + Z, B + Z")
    V0 = cat.dsum([Z, w.V0])
    return K0Witness(A, B, V0, w.V1, w.V2, cat.recast(w.a, cat.dsum([A, V0])), w.b,
                     cat.recast(w.a2, cat.dsum([B, V0])), w.b2)


def permutation(cat, summands, order):
    """The isomorphism ``sum(summands[order]) -> sum(summands)``."""
    k = len(summands)
    rows = [[None] * k for _ in range(k)]
    for col, i in enumerate(order):
        rows[i][col] = cat.identity(summands[i])
    return cat.block(rows, [summands[i] for i in order], summands)


def _ses_pieces(cat, G: RelObjectB):
    """``G ~ sum of its degree pieces`` through the truncations of ``G``."""
    degs = list(G.tar.degrees)
    prev = rel.truncate_rel(G, degs[0])
    w, D = None, prev
    for n in degs[1:]:
        T = rel.truncate_rel(G, n)
        P = rel.degree_piece_rel(G, n)
        s = w_from_ses(cat, rel.inclusion_map(prev, T), rel.piece_projection(T, n), prev, T, P)
        if w is None:
            w = s                                           # T ~ prev + P, prev a piece
        else:
            w = w_trans(cat, s, w_add(cat, w, w_refl(cat, P)))  # T ~ D + P
        D = cat.dsum([D, P])
        prev = T
    return (w if w is not None else w_refl(cat, G)), D


def part3_fabricate(F: FunctorSpec, seed=None, max_length: int = 2, max_dim: int = 2) -> Part3Input:
    """Inputs with ``N = (0, FK, 0)`` and ``N' = 0`` for an acyclic binary ``K``.

    With ``G = ((top K, bot K), FK, 1)`` and the p-morphism ``f: N -> G``, the
    relations ``Cone(f) ~ G + N[-1]``, ``G ~ D'`` (its degree pieces) and
    ``N + N[-1] ~ Cone(1_N)`` are added, reordered and ``G + N[-1]`` is
    cancelled: ``N + Cone(f) ~ Cone(1_N) + D'``.
    """
    from .fabricate import random_acyclic_binary
    _genuine(F)
    rng = as_rng(seed)
    cat = RelCategory(F)
    K = random_acyclic_binary(F.source, rng, max_length=max_length, max_dim=max_dim)
    FK = F(K)
    zs = cx.zero_complex(F.source)
    X0 = rel.rel_b(F, (zs, zs), FK)
    G = rel.rel_b(F, _sides(K), FK, (_identity_dict(FK),) * 2)
    f = rel.rel_map(X0, G, [{}, {}], _identity_dict(FK))
    C = rel.rel_cone(f)
    X0s = rel.shift_rel(X0, -1)
    R1 = w_from_ses(cat, rel.rel_cone_inclusion(f), rel.rel_cone_projection(f), G, C, X0s)
    one = rel.identity_rel(X0)
    C1 = rel.rel_cone(one)
    R2 = w_from_ses(cat, rel.rel_cone_inclusion(one), rel.rel_cone_projection(one), X0, C1, X0s)
    wG, D = _ses_pieces(cat, G)
    # (C + G) + (X0 + X0s) ~ ((G + X0s) + D) + C1
    s = w_add(cat, w_add(cat, R1, wG), w_sym(R2))
    Z = cat.dsum([G, X0s])
    lhs = cat.dsum([cat.dsum([X0, C]), Z])
    phi = cat.recast(permutation(cat, [C, G, X0, X0s], [2, 0, 1, 3]), lhs, s.left)
    s = w_iso_left(cat, s, lhs, phi)
    rhs = cat.dsum([cat.dsum([C1, D]), Z])
    psi = cat.recast(permutation(cat, [G, X0s, D, C1], [3, 2, 0, 1]), rhs, s.right)
    s = w_iso_right(cat, s, rhs, psi)
    w = w_cancel(cat, s, cat.dsum([X0, C]), cat.dsum([C1, D]), Z)
    z = cat.zero()
    X = cat.dsum([X0, C, z, w.V0])
    X2 = cat.dsum([z, C1, D, w.V0])
    return Part3Input(F, X0, C, z, z, C1, D, w.V0, w.V1, w.V2,
                      cat.recast(w.a, X), w.b, cat.recast(w.a2, X2), w.b2, (f, one))


def _rel_iso(g: RelMap) -> bool:
    return rel.is_rel_morphism(g) and all(cx.is_isomorphism(h) for h in rel._map_components(g))


def part3_construct(inp: Part3Input, drop_minus: bool = False) -> WitnessBundle:
    """The binary complex ``E`` in ``C[F]``, the complex ``B`` in ``B[F]`` with
    ``top B = E`` and ``bot B`` isomorphic to ``bot E`` through the signed
    swaps ``g``, and the comparison of classes through ``Tot``.

    ``drop_minus`` builds ``q'`` without its sign (a deliberate mutation).
    """
    F = inp.functor
    _genuine(F)
    cat = RelCategory(F)
    bundle = WitnessBundle("part3", {"input": inp})
    N, C, D, N2, C2, D2 = inp.N, inp.C, inp.D, inp.N2, inp.C2, inp.D2
    V0, V1, V2 = inp.V0, inp.V1, inp.V2
    S, S2 = [N, C, D, V0], [N2, C2, D2, V0]
    X, X2 = cat.dsum(S), cat.dsum(S2)
    a, a2 = cat.recast(inp.a, X), cat.recast(inp.a2, X2)
    b, b2 = inp.b, inp.b2
    bundle.sequence("Q", (a, b), rel.is_exact_rel(a, b))
    bundle.sequence("Q'", (a2, b2), rel.is_exact_rel(a2, b2))
    bundle.check("N and N' have zero source", all(s.total_dim() == 0 for s in N.src + N2.src))
    bundle.check("D and D' are diagonal", rel.is_diagonal_rel(D) and rel.is_diagonal_rel(D2))
    for name, cone, f in zip(("C", "C'"), (C, C2), inp.cone_maps):
        bundle.check(f"{name} is the cone of a p-morphism",
                     rel.is_p_morphism(f) and rel.same_rel(rel.rel_cone(f), cone))

    p, e0 = _restrict(cat, a, S, 2), _restrict(cat, a, S, 3)
    p2, e02 = _restrict(cat, a2, S2, 2), _restrict(cat, a2, S2, 3)
    e1, e12 = b, b2

    # L, L' and the total objects
    def complex_L(DD, pp, ee0, ee1):
        DV = cat.dsum([DD, V0])
        top = cat.block([[pp, ee0]], [DD, V0], [V1])
        return [V2, V1, DV], [(ee1,), (top,)]

    rows_L, fam_L = complex_L(D, p, e0, e1)
    rows_L2, fam_L2 = complex_L(D2, p2, e02, e12)
    TotL, TotL2 = rel.tot_rel(-1, rows_L, fam_L), rel.tot_rel(-1, rows_L2, fam_L2)
    TotQ = rel.tot_rel(-1, [V2, V1, X], [(b,), (a,)])
    TotQ2 = rel.tot_rel(-1, [V2, V1, X2], [(b2,), (a2,)])
    bundle.objects.update({"Tot L": TotL, "Tot L'": TotL2, "Tot Q": TotQ, "Tot Q'": TotQ2})
    z = cat.zero()
    for tag, rows_l, TL, TQ, XX, SS, aa, bb, NN, CC in (
            ("", rows_L, TotL, TotQ, X, S, a, b, N, C),
            ("'", rows_L2, TotL2, TotQ2, X2, S2, a2, b2, N2, C2)):
        NC = cat.dsum([NN, CC])
        quot_rows = [z, z, NC]
        quot = rel.tot_rel(-1, quot_rows, [(rel.zero_rel_map(z, z),), (rel.zero_rel_map(NC, z),)])
        bundle.check(f"Tot of the quotient is (N{tag} + C{tag})[-1]",
                     rel.same_rel(quot, rel.shift_rel(NC, -1)))
        incl = cat.block([[None, None], [None, None], [cat.identity(SS[2]), None],
                          [None, cat.identity(V0)]], [SS[2], V0], SS)
        incl = cat.recast(incl, rows_l[2], XX)
        proj = cat.block([[cat.identity(NN), None, None, None], [None, cat.identity(CC), None, None]],
                         SS, [NN, CC])
        proj = cat.recast(proj, XX, NC)
        i_tot = rel.tot_rel_map(-1, rows_l, [V2, V1, XX],
                                [cat.identity(V2), cat.identity(V1), incl], TL, TQ)
        p_tot = rel.tot_rel_map(-1, [V2, V1, XX], quot_rows,
                                [rel.zero_rel_map(V2, z), rel.zero_rel_map(V1, z), proj], TQ, quot)
        bundle.sequence(f"0 -> Tot L{tag} -> Tot Q{tag} -> (N{tag} + C{tag})[-1] -> 0", (i_tot, p_tot),
                        rel.is_exact_rel(i_tot, p_tot))

    # E in C[F]: top family (q, r), bottom family (q', r')
    T_, B_ = rel.rel_top, rel.rel_bot
    tm, bm = rel.rel_top_map, rel.rel_bot_map
    A1 = [T_(D), B_(D2), T_(V0), B_(V0)]
    A1b = [B_(D), T_(D2), T_(V0), B_(V0)]
    A0 = [T_(V1), B_(V1)]
    Am1 = [T_(V2), B_(V2)]
    ccat = _CCategory(F)
    E1, E0, Em1 = ccat.dsum(A1), ccat.dsum(A0), ccat.dsum(Am1)
    q = ccat.block([[tm(p), None, tm(e0), None], [None, bm(p2), None, bm(e02)]], A1, A0)
    r = ccat.block([[tm(e1), None], [None, bm(e12)]], A0, Am1)
    sign = tm(p2) if drop_minus else -tm(p2)
    q2 = ccat.block([[None, sign, tm(e02), None], [bm(p), None, None, bm(e0)]], A1b, A0)
    q2 = rel.recast(q2, E1)
    r2 = ccat.block([[tm(e12), None], [None, bm(e1)]], A0, Am1)
    E_rows = [Em1, E0, E1]
    bundle.objects.update({"E rows": E_rows, "q": q, "r": r, "q'": q2, "r'": r2})
    bundle.check("top of E is a complex", rel.rel_equal_maps(r @ q, rel.zero_rel_map(E1, Em1)))
    bundle.check("bottom of E is a complex", rel.rel_equal_maps(r2 @ q2, rel.zero_rel_map(E1, Em1)))

    # B in B[F]
    tau, taum = rel.rel_tau, rel.rel_tau_map
    B1s, B0s, Bm1s = [D, tau(D2), V0, tau(V0)], [V1, tau(V1)], [V2, tau(V2)]
    qB = cat.block([[p, None, e0, None], [None, taum(p2), None, taum(e02)]], B1s, B0s)
    rB = cat.block([[e1, None], [None, taum(e12)]], B0s, Bm1s)
    B_rows = [cat.dsum(Bm1s), cat.dsum(B0s), cat.dsum(B1s)]
    TotB = rel.tot_rel(-1, B_rows, [(rB,), (qB,)])
    bundle.check("top B = top E",
                 all(rel.same_rel(T_(x), y) for x, y in zip(B_rows, E_rows))
                 and rel.rel_equal_maps(tm(qB), q) and rel.rel_equal_maps(tm(rB), r))
    q3, r3 = bm(qB), bm(rB)
    Bb = [B_(x) for x in B_rows]

    # g: bot E -> bot B
    one = ccat.identity
    g0 = ccat.block([[one(A1b[0]), None, None, None], [None, one(A1b[1]), None, None],
                     [None, None, None, one(A1b[3])], [None, None, -one(A1b[2]), None]],
                    A1b, [A1b[0], A1b[1], A1b[3], A1b[2]])
    g0 = rel.recast(g0, E1, Bb[2])

    def swap(objs, target):
        m = ccat.block([[None, one(objs[1])], [-one(objs[0]), None]], objs, objs[::-1])
        return rel.recast(m, ccat.dsum(objs), target)
    g1, g2 = swap(A0, Bb[1]), swap(Am1, Bb[0])
    bundle.objects.update({"g0": g0, "g1": g1, "g2": g2})
    bundle.check("(i) g1 q' = q'' g0 and g2 r' = r'' g1",
                 rel.rel_equal_maps(g1 @ q2, q3 @ g0) and rel.rel_equal_maps(g2 @ r2, r3 @ g1))
    bundle.check("(ii) each g^i is an isomorphism in C[F]", all(_rel_iso(g) for g in (g0, g1, g2)))

    TotE = rel.tot_rel(-1, E_rows, [(r, r2), (q, q2)])
    TotE_src = cx.make_binary(*TotE.src)
    bundle.objects.update({"Tot E": TotE, "Tot B": TotB})
    acyc = (cx.is_acyclic(TotE_src) and cx.is_acyclic(TotE.tar) and cx.is_acyclic(TotB.tar)
            and all(cx.is_acyclic(s) for s in TotB.src))
    bundle.check("(iii) Tot E and Tot B are acyclic", acyc)
    TotEb = rel.tot_rel(-1, E_rows, [(r2,), (q2,)])
    TotBb = rel.tot_rel(-1, Bb, [(r3,), (q3,)])
    Totg = rel.tot_rel_map(-1, E_rows, Bb, [g2, g1, g0], TotEb, TotBb)
    elem_ok = True
    for h in rel._map_components(Totg):
        for n, m in h.maps:
            try:
                fs = elementary_product_witness(m)
                elem_ok = elem_ok and product(m.ring, m.rows, fs) == m
            except NotFound:
                elem_ok = False
    bundle.check("(iv) Tot g is degreewise a product of elementary matrices", elem_ok)
    if not acyc:
        return bundle
    c = {k: cls(v.tar) for k, v in (("N", N), ("N'", N2), ("C", C), ("C'", C2), ("Tot L", TotL),
                                     ("Tot L'", TotL2), ("Tot Q", TotQ), ("Tot Q'", TotQ2),
                                     ("Tot E", TotE), ("Tot B", TotB))}
    c["Tot E_src"] = cls(TotE_src)
    bundle.objects["classes"] = c
    bundle.check("(iv) cls(Tot E_tar) = cls(Tot B_tar)", c["Tot E"] == c["Tot B"],
                 f"{c['Tot E']} vs {c['Tot B']}")
    bundle.check("(vi) cls(C) = cls(C') = cls(Tot Q) = cls(Tot Q') = 1",
                 all(c[k].is_one() for k in ("C", "C'", "Tot Q", "Tot Q'")))
    bundle.check("(vi) cls(N)/cls(N') = cls(Tot L)/cls(Tot L')",
                 c["N"] / c["N'"] == c["Tot L"] / c["Tot L'"])
    ratio = c["N"] / c["N'"]
    bundle.check("cls(Tot E_tar) = cls(N)/cls(N')", c["Tot E"] == ratio, f"{c['Tot E']} vs {ratio}")
    bundle.check("cls(Tot E_tar) = F(cls(Tot E_src))", c["Tot E"] == F.unit(c["Tot E_src"]),
                 f"{c['Tot E']} vs F({c['Tot E_src']})")
    return bundle


class _CCategory(RelCategory):
    """Objects of ``C[F]``: sums are not binary."""

    def zero(self):
        return rel.zero_rel(self.functor, binary=False)

    def dsum(self, objs):
        return rel.direct_sum_rel_all(list(objs), self.functor, binary=False)
