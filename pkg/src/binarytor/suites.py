"""Named property suites, run by ``binarytor verify`` and by the test-suite.

A suite draws ``count`` seeded instances and checks one or more properties on
each.  Instance ``k`` of a run with seed ``s`` uses the seed ``(s, k)``, so
runs are deterministic and any failing instance can be replayed alone.  The
default seed is ``BINARYTOR_SEED`` when set, otherwise 0.
"""
from __future__ import annotations

import itertools
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import complexes as cx
from . import relative as rel
from .complexes import ChainMap, binary, delta, shift, tau, top, bot
from .fabricate import (as_rng, random_acyclic, random_acyclic_binary, random_complex,
                        random_rel_object)
from .matrix import (Matrix, NoSolution, block_diag, det, inverse, kernel_basis, random_gl,
                     random_invertible, random_matrix, rank, smith_normal_form, solve)
from .proofs import (COMPOSITES, Check, UnequalClass, composite_certificate, k0_witness_construct,
                     k0_witness_verify, k0omegashift_witness, part0_reduction, part1_construct,
                     part2_construct, part3_construct, part3_fabricate, ses_witness, totbcf_check,
                     totbcf_fabricate)
from .relative import BaseChange, FunctorSpec, Identity, Power, ZeroSource, ZeroTarget
from .rings import GF, QQ, ZZ, Ring, parse_ring
from .torsion import (Elementary, auto_complex, cls, diffrot_product, elementary_product_witness,
                      product, rotation_matrix, signed_swap_factors, topbotiso_product, torsion,
                      transport)

F3, F5 = GF(3), GF(5)
RINGS = (QQ, F5, ZZ)

# the ring/functor combinations each bundle runs over
BUNDLE_FUNCTORS = (Identity(QQ), Identity(F3), Power(2, QQ), BaseChange(ZZ, QQ), BaseChange(ZZ, F5))
COMPOSITE_FUNCTORS = (Identity(F3), Power(2, QQ), BaseChange(ZZ, QQ))


def default_seed() -> int:
    text = os.environ.get("BINARYTOR_SEED", "").strip()
    return int(text) if text else 0


def instance_rng(seed: int, k: int) -> random.Random:
    return random.Random(f"{seed}:{k}")


@dataclass
class SuiteReport:
    name: str
    target: str
    seed: int
    count: int
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable          # (rng, target) -> iterator of (property, passed, detail)
    targets: tuple         # rings or functors
    count: int
    doc: str
    kind: str = "ring"     # "ring", "functor" or "fixed"


SUITES: dict[str, Suite] = {}


def suite(name: str, targets=RINGS, count: int = 100, kind: str = "ring"):
    def wrap(fn):
        SUITES[name] = Suite(name, fn, tuple(targets), count, (fn.__doc__ or "").strip(), kind)
        return fn
    return wrap


def resolve_targets(s: Suite, spec: str | None) -> tuple:
    """The rings or functors a run covers; ``spec`` is a ring or functor descriptor."""
    if spec is None:
        return s.targets
    if s.kind == "fixed":
        return (parse_ring(spec),)
    try:
        F = rel.parse_functor(spec)
    except ValueError:
        F = None
    if s.kind == "functor":
        if F is not None:
            return (F,)
        R = parse_ring(spec)
        picked = tuple(G for G in s.targets if R in (G.source, G.target))
        if not picked:
            raise ValueError(f"suite {s.name} has no functor over {R.name}")
        return picked
    if F is not None:
        raise ValueError(f"suite {s.name} takes a ring, not a functor")
    return (parse_ring(spec),)


def run_suite(name: str, seed: int | None = None, count: int | None = None,
              target: str | None = None) -> list[SuiteReport]:
    """Run a suite once per ring or functor; one report per target."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    s = SUITES[name]
    seed = default_seed() if seed is None else seed
    count = s.count if count is None else count
    out = []
    for t in resolve_targets(s, target):
        t0 = time.perf_counter()
        tally: dict[str, list] = {}
        for k in range(count):
            for prop, ok, detail in s.run(instance_rng(seed, k), t):
                entry = tally.setdefault(prop, [0, 0, []])
                entry[0] += 1
                if ok:
                    entry[1] += 1
                elif len(entry[2]) < 3:
                    entry[2].append(f"instance {k}: {detail}" if detail else f"instance {k}")
        checks = [Check(prop, n == good, f"{good}/{n} instances" + ("; " + "; ".join(bad) if bad else ""))
                  for prop, (n, good, bad) in tally.items()]
        out.append(SuiteReport(name, t.name, seed, count, checks, time.perf_counter() - t0))
    return out


# -- exact linear algebra -----------------------------------------------------------------------

def _square(rng, ring, lo=1, hi=4):
    n = rng.randint(lo, hi)
    return random_matrix(ring, n, n, rng)


@suite("rank-nullity", (QQ, F5))
def _rank_nullity(rng, ring):
    """rank(m) plus the number of kernel basis columns is the number of columns."""
    m = random_matrix(ring, rng.randint(0, 5), rng.randint(0, 5), rng)
    k = kernel_basis(m)
    yield "rank + nullity = cols", rank(m) + k.cols == m.cols, ""
    yield "kernel columns are killed", (m @ k).is_zero(), ""


@suite("det")
def _det(rng, ring):
    """det is multiplicative and elementary matrices have determinant one."""
    a = _square(rng, ring)
    b = random_matrix(ring, a.rows, a.rows, rng)
    yield "det(ab) = det(a) det(b)", det(a @ b) == ring.normalize(det(a) * det(b)), ""
    e = random_invertible(ring, a.rows, rng)
    yield "det(product of elementaries) = 1", det(e) == 1, ""


@suite("smith", (ZZ,))
def _smith(rng, ring):
    """U m V = D with unimodular U, V."""
    m = random_matrix(ring, rng.randint(1, 5), rng.randint(1, 5), rng, bound=6)
    U, D, V = smith_normal_form(m)
    yield "U m V = D", U @ m @ V == D, ""
    yield "|det U| = |det V| = 1", abs(det(U)) == 1 and abs(det(V)) == 1, ""
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    off = all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)
    divides = all(b % a == 0 if a else b == 0 for a, b in zip(diag, diag[1:]))
    yield "D is diagonal with dividing invariants", off and divides and all(x >= 0 for x in diag), ""


@suite("solve")
def _solve(rng, ring):
    """A returned solution solves the system; NoSolution is confirmed independently."""
    m = random_matrix(ring, rng.randint(1, 4), rng.randint(1, 3), rng)
    if rng.random() < 0.5:
        b = m @ random_matrix(ring, m.cols, 1, rng)
    else:
        b = random_matrix(ring, m.rows, 1, rng)
    try:
        x = solve(m, b)
    except NoSolution:
        yield "NoSolution is correct", _confirm_unsolvable(m, b), ""
        return
    yield "m x = b", m @ x == b, ""


def _confirm_unsolvable(m: Matrix, b: Matrix, box: int = 6) -> bool:
    """No rational solution, or (over ZZ) no integral one: a unique rational
    solution that is not integral, or none in a box of small integers."""
    if rank(m) < rank(_hcat(m, b)):
        return True
    if m.ring != ZZ:
        return False
    q = m.map_ring(QQ)
    x = solve(q, b.map_ring(QQ))
    if kernel_basis(q).cols == 0:
        return any(x[i, 0].denominator != 1 for i in range(x.rows))
    rows, rhs = m.tolist(), [r[0] for r in b.tolist()]
    for v in itertools.product(range(-box, box + 1), repeat=m.cols):
        if all(sum(a * t for a, t in zip(r, v)) == c for r, c in zip(rows, rhs)):
            return False
    return True


def _hcat(a: Matrix, b: Matrix) -> Matrix:
    return Matrix.from_rows(a.ring, [list(r) + list(s) for r, s in zip(a, b)], a.cols + b.cols)


# -- complexes ----------------------------------------------------------------------------------------

@suite("complexes")
def _complexes(rng, ring):
    """Shift preserves acyclicity, tau swaps top and bottom, cones split, Euler characteristics vanish."""
    c = random_complex(ring, rng) if rng.random() < 0.5 else random_acyclic(ring, rng)
    i = rng.randint(-3, 3)
    yield "acyclic(shift(c, i)) = acyclic(c)", cx.is_acyclic(shift(c, i)) == cx.is_acyclic(c), ""
    b = random_acyclic_binary(ring, rng, max_length=4, max_dim=3)
    yield "top(tau b) = bot b and bot(tau b) = top b", top(tau(b)) == bot(b) and bot(tau(b)) == top(b), ""
    if ring.is_field:
        a = random_acyclic(ring, rng)
        yield "euler_char(acyclic) = 0", cx.euler_char(a) == 0, ""
    f = _random_chain_map(ring, rng)
    C = cx.mapping_cone(f)
    i_, p_ = cx.cone_inclusion(f), cx.cone_projection(f)
    ok = all(cx.is_exact_sequence(ring, [i_.at(n), p_.at(n)]) for n in C.degrees)
    yield "0 -> target -> Cone -> source[-1] -> 0 is degreewise exact", ok and cx.is_chain_map(i_) \
        and cx.is_chain_map(p_), ""
    a1, a2 = random_acyclic(ring, rng, max_length=3, max_dim=2), random_acyclic(ring, rng, max_length=3, max_dim=2)
    g = ChainMap(a1, a2, {})
    yield "a map of acyclic complexes is a quasi-isomorphism", cx.is_quasi_iso(g), ""


def _random_chain_map(ring, rng) -> ChainMap:
    """``d h + h d + lam * 1``: a chain map for any graded ``h``."""
    c = random_complex(ring, rng, max_length=3, max_dim=2)
    h = {n: random_matrix(ring, c.dim(n + 1), c.dim(n), rng) for n in c.degrees}
    lam = rng.randint(0, 2)
    maps = {}
    for n in c.degrees:
        m = c.diff(n + 1) @ h[n]
        if n - 1 in h:
            m = m + h[n - 1] @ c.diff(n)
        maps[n] = m + Matrix.identity(ring, c.dim(n)).scale(lam)
    return ChainMap(c, c, maps)


@suite("total-acyclic")
def _total_acyclic(rng, ring):
    """The total complex of a bicomplex with acyclic rows is acyclic."""
    x = random_acyclic(ring, rng, max_length=3, max_dim=2)
    k = rng.randint(2, 3)
    # rows x, x, (x) joined by alternating identity and zero maps
    verts = []
    for i in range(k - 1):
        verts.append({n: Matrix.identity(ring, x.dim(n)) for n in x.degrees} if i % 2 == 0 else {})
    cc = cx.ComplexOfComplexes(0, tuple([x] * k), tuple(reversed(verts)))
    yield "bicomplex is valid", not cx.validate_bicomplex(cc), ""
    yield "Tot is acyclic", cx.is_acyclic(cx.total_complex(cc)), ""


# -- the torsion oracle and K1 identities -------------------------------------------------------------

@suite("oracle", count=200)
def _oracle(rng, ring):
    """Torsion agrees under the pivot and the randomized contraction; over ZZ cls is a sign."""
    b = random_acyclic_binary(ring, rng, max_length=5, max_dim=4)
    same = all(torsion(s) == torsion(s, "random", random.Random(rng.random())) for s in (top(b), bot(b)))
    yield "torsion(pivot) = torsion(random)", same, ""
    if ring == ZZ:
        v = cls(b).value
        yield "cls over ZZ is +1 or -1", v in (1, -1), str(v)


@suite("k1delta")
def _k1delta(rng, ring):
    """cls of a diagonal binary complex is 1."""
    c = random_acyclic(ring, rng)
    yield "cls(delta c) = 1", cls(delta(c)).is_one(), ""


@suite("k1autoadd")
def _k1autoadd(rng, ring):
    """cls(A(theta psi)) = cls(A(theta)) cls(A(psi))."""
    n = rng.randint(1, 4)
    t, p = random_gl(ring, n, rng), random_gl(ring, n, rng)
    lhs = cls(auto_complex(t @ p))
    rhs = cls(auto_complex(t)) * cls(auto_complex(p))
    yield "cls(A(theta psi)) = cls(A(theta)) cls(A(psi))", lhs == rhs, f"{lhs} vs {rhs}"


def random_elementary_product(ring: Ring, n: int, rng, max_factors: int = 10) -> Matrix:
    """A product of at most ``max_factors`` elementary automorphisms, each
    ``[[1, *], [0, 1]]`` for a random split, conjugated into random coordinates."""
    out = Matrix.identity(ring, n)
    for _ in range(rng.randint(1, max_factors)):
        k = rng.randint(1, n - 1) if n > 1 else 0
        if n < 2:
            continue
        order = list(range(n))
        rng.shuffle(order)
        rows, cols = order[:k], order[k:]
        e = Matrix.identity(ring, n).tolist()
        for i in rows:
            for j in cols:
                e[i][j] = ring.random_element(rng, 3)
        out = out @ Matrix.from_rows(ring, e, n)
    return out


@suite("k1elementary")
def _k1elementary(rng, ring):
    """cls(A(E)) = 1 for products of elementary automorphisms."""
    n = rng.randint(1, 4)
    E = random_elementary_product(ring, n, rng)
    yield "cls(A(E)) = 1", cls(auto_complex(E)).is_one(), ""


@suite("k1shift")
def _k1shift(rng, ring):
    """cls(shift(b, i)) = cls(b)^((-1)^i) for i in -2..2."""
    b = random_acyclic_binary(ring, rng, max_length=4, max_dim=3)
    c = cls(b)
    for i in range(-2, 3):
        e = -1 if i % 2 else 1
        v = cls(shift(b, i))
        yield f"cls(b[{i}]) = cls(b)^{e}", v == c ** e, f"{v} vs {c}"


@suite("k1tau")
def _k1tau(rng, ring):
    """cls(tau b) = cls(b)^-1."""
    b = random_acyclic_binary(ring, rng, max_length=4, max_dim=3)
    yield "cls(tau b) = cls(b)^-1", cls(tau(b)) == cls(b).inverse(), ""


@suite("k1topbotiso")
def _k1topbotiso(rng, ring):
    """cls(N)/cls(M) = prod_i det(f_i g_i^-1)^((-1)^i) for N transported from M."""
    M = random_acyclic_binary(ring, rng, max_length=4, max_dim=3)
    f = {n: random_gl(ring, M.dim(n), rng) for n in M.degrees}
    g = {n: random_gl(ring, M.dim(n), rng) for n in M.degrees}
    N = transport(M, f, g)
    lhs, rhs = cls(N) / cls(M), topbotiso_product(ring, f, g)
    yield "cls(N)/cls(M) = prod (f_i g_i^-1)^((-1)^i)", lhs == rhs, f"{lhs} vs {rhs}"


def random_acyclic_differentials(ring: Ring, rng, n: int):
    """``n`` acyclic differentials on one graded object (conjugates of one complex)."""
    c = random_acyclic(ring, rng, max_length=4, max_dim=3)
    out = []
    for _ in range(n):
        gl = {m: random_gl(ring, c.dim(m), rng) for m in c.degrees}
        out.append([gl[m - 1] @ c.diff(m) @ inverse(gl[m]) for m in range(c.lo + 1, c.hi + 1)])
    return c.lo, c.dims, out


@suite("k1diffrot")
def _k1diffrot(rng, ring):
    """prod_k cls((N, d_k, d_sigma(k))) = 1 for n = 2, 3, 4 and random permutations."""
    for n in (2, 3, 4):
        lo, dims, diffs = random_acyclic_differentials(ring, rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        v = diffrot_product(lo, dims, diffs, perm, ring)
        yield f"diffrot product = 1 (n={n})", v.is_one(), f"perm {perm}: {v}"


@suite("additivity")
def _additivity(rng, ring):
    """cls(middle) = cls(sub) cls(quotient) for degreewise split extensions."""
    A = random_acyclic_binary(ring, rng, max_length=4, max_dim=2, lo=0)
    C = random_acyclic_binary(ring, rng, max_length=4, max_dim=2, lo=0)
    B = split_extension(A, C, rng)
    lhs, rhs = cls(B), cls(A) * cls(C)
    yield "cls(B) = cls(A) cls(C)", lhs == rhs, f"{lhs} vs {rhs}"


def split_extension(A, C, rng):
    """``A + C`` with differentials ``[[d_A, x], [0, d_C]]``, ``x = d_A h - h d_C``."""
    ring = A.ring
    lo = min(A.lo, C.lo)
    hi = max(A.hi, C.hi)
    dims = [A.dim(n) + C.dim(n) for n in range(lo, hi + 1)]
    sides = []
    for side in (top, bot):
        a, c = side(A), side(C)
        h = {n: random_matrix(ring, a.dim(n), c.dim(n), rng) for n in range(lo - 1, hi + 1)}
        ds = []
        for n in range(lo + 1, hi + 1):
            x = a.diff(n) @ h[n] - h[n - 1] @ c.diff(n)
            ds.append(Matrix.from_rows(ring, [list(r) + list(s) for r, s in zip(a.diff(n), x)]
                                       + [[ring.zero()] * a.dim(n) + list(r) for r in c.diff(n)],
                                       dims[n - lo]))
        sides.append(ds)
    return binary(ring, lo, dims, sides[0], sides[1])


# -- bit-exact matrix identities -------------------------------------------------------------------------

PAPER_2x2 = ([[1, 0], [1, 1]], [[1, -1], [0, 1]], [[1, 0], [1, 1]])


@suite("elem2x2", count=1)
def _elem2x2(rng, ring):
    """The three elementary factors of [[0, -1], [1, 0]], entry by entry."""
    fs = [e.matrix() for e in signed_swap_factors(ring, 1, 2, 0, 1)]
    want = [Matrix.from_rows(ring, m) for m in PAPER_2x2]
    yield "factors are [[1,0],[1,1]], [[1,-1],[0,1]], [[1,0],[1,1]]", fs == want, str([f.tolist() for f in fs])
    prod = fs[0] @ fs[1] @ fs[2]
    yield "product is [[0,-1],[1,0]]", prod == Matrix.from_rows(ring, [[0, -1], [1, 0]]), ""


@suite("rotation", (F5, QQ, ZZ))
def _rotation(rng, ring):
    """S (d_1 + ... + d_n) = (d_2 + ... + d_n + d_1) S, det S = 1, S a product of elementaries."""
    n = rng.randint(1, 4)
    r, c = rng.randint(1, 3), rng.randint(1, 3)
    ds = [random_matrix(ring, r, c, rng) for _ in range(n)]
    S_out, S_in = rotation_matrix([r] * n, ring), rotation_matrix([c] * n, ring)
    lhs = S_out @ block_diag(ring, ds)
    rhs = block_diag(ring, ds[1:] + ds[:1]) @ S_in
    yield "S (+d_i) = (+d_{sigma i}) S", lhs == rhs, ""
    yield "det S = 1", det(S_in) == 1, ""
    yield "S is a product of elementary matrices", product(ring, S_in.rows, elementary_product_witness(S_in)) == S_in, ""


# -- witness bundles ----------------------------------------------------------------------------------------

def _bundle_checks(b, prefix=""):
    bad = b.failed()
    yield prefix + "bundle passes", not bad, "; ".join(bad)


@suite("k0witness", (QQ, F5))
def _k0witness(rng, ring):
    """Construction succeeds iff ranks agree; constructed witnesses verify."""
    m, m2 = rng.randint(0, 4), rng.randint(0, 4)
    if rng.random() < 0.5:
        m2 = m
    try:
        b = k0_witness_construct(ring, m, m2, seed=rng)
    except UnequalClass:
        yield "construct succeeds iff dims match", m != m2, f"{m} vs {m2}"
        return
    yield "construct succeeds iff dims match", m == m2, f"{m} vs {m2}"
    w = b.objects["witness"]
    v = k0_witness_verify(ring, m, m2, w.V0, w.V1, w.V2, w.a, w.b, w.a2, w.b2)
    yield "constructed bundle passes", b.passes, "; ".join(b.failed())
    yield "k0_witness_verify accepts the witness", v.passes, "; ".join(v.failed())


@suite("ses-witness", (QQ, F5, ZZ))
def _ses(rng, ring):
    """The witness M ~ M' + M'' of a short exact sequence verifies."""
    a, c = rng.randint(0, 3), rng.randint(0, 3)
    P = random_gl(ring, a + c, rng)
    i = P.submatrix(range(a + c), range(a))
    p = inverse(P).submatrix(range(a, a + c), range(a + c))
    yield from _bundle_checks(ses_witness(ring, i, p))


@suite("part0", (Identity(QQ), Identity(F3), Identity(ZZ)), count=50, kind="functor")
def _part0(rng, F):
    """p-morphism to the tautological object and its diagonal degree filtration."""
    yield from _bundle_checks(part0_reduction(random_rel_object(F, rng)))


@suite("part1", BUNDLE_FUNCTORS, count=50, kind="functor")
def _part1(rng, F):
    """An object of B[F] projecting to [M] - [M'] when [FM] = [FM']."""
    m = rng.randint(0, 3)
    yield from _bundle_checks(part1_construct(F, m, m, seed=rng))


@suite("part2", BUNDLE_FUNCTORS, count=50, kind="functor")
def _part2(rng, F):
    """Restricted form: equal source gradings, replaced by one source complex."""
    yield from _bundle_checks(part2_construct(random_rel_object(F, rng, equal_grading=True)))


PART3_FUNCTORS = (Identity(QQ), Identity(F3), Power(2, QQ), BaseChange(ZZ, QQ), BaseChange(ZZ, F5))


@suite("part3", PART3_FUNCTORS, count=50, kind="functor")
def _part3(rng, F):
    """Cone', the maps q, r, q', r', q'', r'' and g, and the final class identity."""
    inp = part3_fabricate(F, rng)
    yield from _bundle_checks(part3_construct(inp))


@suite("part3-identities", (Identity(F3), BaseChange(ZZ, F5)), count=50, kind="functor")
def _part3_identities(rng, F):
    """g1 q' = q'' g0 and g2 r' = r'' g1, entry by entry."""
    b = part3_construct(part3_fabricate(F, rng))
    for c in b.all_checks():
        if c.name.startswith("(i) "):
            yield c.name[4:], c.passed, c.detail


@suite("k0omegashift", BUNDLE_FUNCTORS + (ZeroSource(QQ), ZeroTarget(F3)), count=50, kind="functor")
def _k0omegashift(rng, F):
    """0 -> x -> Cone(1_x) -> x[-1] -> 0 with a diagonal filtration of the cone."""
    yield from _bundle_checks(k0omegashift_witness(random_rel_object(F, rng)))


@suite("totbcf", BUNDLE_FUNCTORS, count=50, kind="functor")
def _totbcf(rng, F):
    """cls(Tot E_tar) = F(cls(Tot E_src)) with a filtered cone certificate."""
    yield from _bundle_checks(totbcf_check(*totbcf_fabricate(F, rng)))


def generator_for(which: str, F: FunctorSpec, rng):
    first = which.split("->")[0].strip("() ")
    pair = {"1,F": ZeroSource(F.source), "0,1": ZeroSource(F.target), "1,0": F}[first]
    return random_rel_object(pair, rng)


@suite("composites", COMPOSITE_FUNCTORS, count=50, kind="functor")
def _composites(rng, F):
    """Each adjacent pair of maps of pairs sends a generator to a certified zero class."""
    for which in COMPOSITES:
        b = composite_certificate(which, generator_for(which, F, rng), F)
        yield f"{which} certified trivial", b.passes, "; ".join(b.failed())


def break_comparison(x):
    """``x`` with its first comparison map replaced by zero."""
    comp = list(x.comp)
    comp[0] = {}
    return type(x)(x.functor, x.src, x.tar, tuple(comp))


@suite("mutation-q", (Identity(F3), Identity(QQ)), count=10, kind="functor")
def _mutation_q(rng, F):
    """Dropping the minus sign in q' fails exactly the check g1 q' = q'' g0, g2 r' = r'' g1."""
    b = part3_construct(part3_fabricate(F, rng), drop_minus=True)
    failed = b.failed()
    yield "mutant fails exactly check (i)", failed == ["(i) g1 q' = q'' g0 and g2 r' = r'' g1"], \
        "; ".join(failed)


@suite("mutation-comparison", BUNDLE_FUNCTORS, count=10, kind="functor")
def _mutation_comparison(rng, F):
    """A comparison map that is not a quasi-isomorphism fails exactly 'x is a valid object'."""
    while True:
        x = random_rel_object(F, rng)
        if not cx.is_acyclic(x.src[0]):
            break
    b = k0omegashift_witness(break_comparison(x))
    failed = b.failed()
    yield "mutant fails exactly 'x is a valid object'", failed == ["x is a valid object"], "; ".join(failed)


# -- relative categories ------------------------------------------------------------------------------------

@suite("functor-exact", (Identity(QQ), Power(2, QQ), Power(3, F5), BaseChange(ZZ, QQ), BaseChange(ZZ, F5)),
       kind="functor")
def _functor_exact(rng, F):
    """F preserves acyclicity and commutes with mapping cones entrywise."""
    a = random_acyclic(F.source, rng, max_length=4, max_dim=3)
    yield "F(acyclic) is acyclic", cx.is_acyclic(F(a)), ""
    f = _random_chain_map(F.source, rng)
    yield "F(Cone f) = Cone(F f)", cx.same_complex(F(cx.mapping_cone(f)), cx.mapping_cone(F.chain_map(f))), ""


@suite("pair-maps", (Identity(QQ), Power(2, QQ), BaseChange(ZZ, QQ), BaseChange(ZZ, F5)), kind="functor")
def _pair_maps(rng, F):
    """Maps of pairs, shifts and differences of valid objects are valid."""
    x0 = random_rel_object(ZeroSource(F.source), rng)
    yield "(1,F) gives a valid object", not rel.validate_rel(rel.pair_map("1,F", x0, F)), ""
    y0 = random_rel_object(ZeroSource(F.target), rng)
    yield "(0,1) gives a valid object", not rel.validate_rel(rel.pair_map("0,1", y0, F)), ""
    x = random_rel_object(F, rng)
    y = random_rel_object(F, rng)
    yield "shift_rel gives a valid object", not rel.validate_rel(rel.shift_rel(x, rng.randint(-2, 2))), ""
    yield "difference gives a valid object", not rel.validate_rel(rel.difference_as_single_generator(x, y)), ""
    # (1,0) then (F,1): Euler characteristics of top F src_1 and bot F src_2 agree
    z = rel.pair_map("F,1", rel.pair_map("1,0", x, F), F)
    e_src = cx.euler_char(F(x.src[0])) - cx.euler_char(F(x.src[1]))
    e_tar = cx.euler_char(top(x.tar)) - cx.euler_char(bot(x.tar))
    yield "(F,1)(1,0): chi(F src_1) - chi(F src_2) = chi(top) - chi(bot) = 0", \
        e_src == e_tar == 0 and rel.class_of(z) == 0, f"{e_src}, {e_tar}"
    w = rel.pair_map("1,0", rel.pair_map("0,1", y0, F), F)
    yield "(1,0)(0,1) = 0", all(s.total_dim() == 0 for s in w.src) and w.tar.total_dim() == 0, ""


# -- documents ----------------------------------------------------------------------------------------------

@suite("roundtrip")
def _roundtrip(rng, ring):
    """serialize(parse(doc)) reproduces the document."""
    from .io import dumps, loads
    objs = [random_complex(ring, rng), random_acyclic_binary(ring, rng, max_length=4, max_dim=3)]
    if ring == ZZ:
        objs.append(random_rel_object(BaseChange(ZZ, QQ), rng))
    else:
        objs.append(random_rel_object(Power(2, ring), rng))
    for x in objs:
        text = dumps(x)
        yield f"round trip ({type(x).__name__})", dumps(loads(text)) == text, ""


def selftest_plan() -> Iterator[tuple[str, str | None]]:
    """Every suite over every default target."""
    for name, s in SUITES.items():
        for t in s.targets:
            yield name, t.name
