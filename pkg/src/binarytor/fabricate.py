"""Seeded random generators for complexes and maps."""
from __future__ import annotations

import random as _random

from .complexes import BinaryComplex, ChainComplex, chain, binary, shift, top, bot
from .matrix import Matrix, block_matrix, inverse, random_gl, random_matrix
from .rings import Ring


def as_rng(seed) -> _random.Random:
    return seed if isinstance(seed, _random.Random) else _random.Random(seed)


def random_ranks(rng, length: int, max_dim: int = 4) -> list[int]:
    """Ranks ``b_lo .. b_hi`` of the boundary maps with ``b_{n-1} + b_n <= max_dim``."""
    while True:
        ranks = [0] * length
        for k in range(length - 1):
            hi = max_dim - (ranks[k - 1] if k else 0)
            ranks[k] = rng.randint(0, max(hi, 0))
        if any(ranks):
            return ranks


def _standard_diffs(ring, ranks):
    """Differentials of a sum of identity two-term pieces.

    Degree ``k`` is ``Z^{b_{k-1}} + Z^{b_k}``; ``d_k`` sends the first summand
    identically onto the second summand of degree ``k - 1``.
    """
    dims = [ranks[k] + (ranks[k - 1] if k else 0) for k in range(len(ranks))]
    diffs = []
    for k in range(1, len(ranks)):
        b = ranks[k - 1]
        grid = [[None, None], [Matrix.identity(ring, b), None]]
        diffs.append(block_matrix(ring, grid, [ranks[k - 2] if k > 1 else 0, b], [b, ranks[k]]))
    return dims, diffs


def conjugate(ring, lo, dims, diffs, gls):
    """``g_{n-1} d_n g_n^{-1}`` degreewise."""
    invs = [inverse(g) for g in gls]
    return [gls[k] @ diffs[k] @ invs[k + 1] for k in range(len(diffs))]


def random_acyclic(ring: Ring, seed=None, max_length: int = 5, max_dim: int = 4,
                   lo: int | None = None) -> ChainComplex:
    """A random acyclic complex of length at most ``max_length`` (degrees)."""
    rng = as_rng(seed)
    length = rng.randint(2, max_length)
    ranks = random_ranks(rng, length, max_dim)
    dims, diffs = _standard_diffs(ring, ranks)
    gls = [random_gl(ring, n, rng) for n in dims]
    lo = rng.randint(-2, 2) if lo is None else lo
    return chain(ring, lo, dims, conjugate(ring, lo, dims, diffs, gls))


def random_acyclic_binary(ring: Ring, seed=None, max_length: int = 5, max_dim: int = 4,
                          lo: int | None = None) -> BinaryComplex:
    """Top and bottom are independent conjugates of one standard acyclic complex."""
    rng = as_rng(seed)
    length = rng.randint(2, max_length)
    ranks = random_ranks(rng, length, max_dim)
    dims, diffs = _standard_diffs(ring, ranks)
    lo = rng.randint(-2, 2) if lo is None else lo
    tops = conjugate(ring, lo, dims, diffs, [random_gl(ring, n, rng) for n in dims])
    bots = conjugate(ring, lo, dims, diffs, [random_gl(ring, n, rng) for n in dims])
    return binary(ring, lo, dims, tops, bots)


def random_acyclic_binary_like(b: BinaryComplex, seed=None) -> BinaryComplex:
    """Another acyclic binary complex with the same grading and the same ranks as ``b``."""
    rng = as_rng(seed)
    from .matrix import rank
    t = top(b)
    ranks = [rank(t.diff(n + 1)) for n in t.degrees]
    dims, diffs = _standard_diffs(b.ring, ranks)
    tops = conjugate(b.ring, b.lo, dims, diffs, [random_gl(b.ring, n, rng) for n in dims])
    bots = conjugate(b.ring, b.lo, dims, diffs, [random_gl(b.ring, n, rng) for n in dims])
    return binary(b.ring, b.lo, dims, tops, bots)


def random_complex(ring: Ring, seed=None, max_length: int = 4, max_dim: int = 3) -> ChainComplex:
    """A random, usually non-acyclic, complex: a standard acyclic part plus
    free homology summands, conjugated."""
    rng = as_rng(seed)
    length = rng.randint(1, max_length)
    ranks = random_ranks(rng, length, max_dim) if length > 1 else [0]
    dims, diffs = _standard_diffs(ring, ranks)
    extra = [rng.randint(0, 1) for _ in dims]
    full_dims = [a + e for a, e in zip(dims, extra)]
    full = [block_matrix(ring, [[d, None], [None, None]], [dims[k], extra[k]],
                         [dims[k + 1], extra[k + 1]]) for k, d in enumerate(diffs)]
    lo = rng.randint(-1, 1)
    gls = [random_gl(ring, n, rng) for n in full_dims]
    return chain(ring, lo, full_dims, conjugate(ring, lo, full_dims, full, gls))


def random_binary_shifted(ring: Ring, seed=None, **kw) -> BinaryComplex:
    rng = as_rng(seed)
    b = random_acyclic_binary(ring, rng, **kw)
    return shift(b, rng.randint(-2, 2))


def random_automorphism(ring: Ring, n: int, seed=None) -> Matrix:
    return random_gl(ring, n, as_rng(seed))


def random_diagonal_acyclic(ring: Ring, seed=None, **kw):
    from .complexes import delta
    return delta(random_acyclic(ring, seed, **kw))


# -- relative objects -----------------------------------------------------------------------------

def _conj_complex(ring, lo, dims, diffs, rng):
    gls = [random_gl(ring, n, rng) for n in dims]
    return chain(ring, lo, dims, conjugate(ring, lo, dims, diffs, gls)), gls


def _sum_standard(ring, parts):
    """Block sum of standard complexes given as ``(dims, diffs)`` on one grading."""
    length = len(parts[0][0])
    dims = [sum(p[0][k] for p in parts) for k in range(length)]
    diffs = []
    for k in range(length - 1):
        grid = [[p[1][k] if a == b else None for b, p in enumerate(parts)] for a, _ in enumerate(parts)]
        diffs.append(block_matrix(ring, grid, [p[0][k] for p in parts], [p[0][k + 1] for p in parts]))
    return dims, diffs


def _std(ring, rng, length, max_dim):
    if length < 2:
        return [0] * length, []
    ranks = random_ranks(rng, length, max_dim)
    dims, diffs = _standard_diffs(ring, ranks)
    return dims, diffs


def random_rel_object(F, seed=None, max_length: int = 3, max_dim: int = 2,
                      equal_grading: bool = False, lo: int | None = None):
    """A random valid object of ``B[F]``.

    Sources ``M_k = H + A_k`` (shared homology ``H``, acyclic ``A_k``); the
    target has top ``F M_1 + F A_2 + P`` and bottom ``F M_2 + F A_1 + P``,
    each side conjugated independently, with the comparisons the conjugated
    inclusions.  With ``equal_grading`` both sources have the same grading.
    """
    from .complexes import zero_complex, BinaryComplex as _B
    from .relative import rel_b
    rng = as_rng(seed)
    S, T = F.source, F.target
    length = rng.randint(2, max(2, max_length))
    lo = rng.randint(-1, 1) if lo is None else lo
    if F.source_is_zero:
        tar = random_acyclic_binary(T, rng, max_length=max(2, max_length), max_dim=max_dim + 1, lo=lo)
        z = zero_complex(S)
        return rel_b(F, (z, z), tar)
    hom = [rng.randint(0, 1) for _ in range(length)]
    a1 = _std(S, rng, length, max_dim)
    a2 = a1 if equal_grading else _std(S, rng, length, max_dim)
    zero_d = [Matrix.zeros(S, hom[k], hom[k + 1]) for k in range(length - 1)]
    srcs, gls_src = [], []
    for a in (a1, a2):
        dims, diffs = _sum_standard(S, [(hom, zero_d), a])
        m, g = _conj_complex(S, lo, dims, diffs, rng)
        srcs.append(m)
        gls_src.append(g)
    if F.target_is_zero:
        return rel_b(F, srcs, _B(T, 0, ()))
    p = _std(T, rng, length, max_dim)
    fa1 = ([F.dim(x) for x in a1[0]], [F.matrix(x) for x in a1[1]])
    fa2 = ([F.dim(x) for x in a2[0]], [F.matrix(x) for x in a2[1]])
    fh = ([F.dim(x) for x in hom], [F.matrix(x) for x in zero_d])
    sides, comps = [], []
    for k, (own, other) in enumerate(((fa1, fa2), (fa2, fa1))):
        dims, diffs = _sum_standard(T, [fh, own, other, p])
        gls = [random_gl(T, n, rng) for n in dims]
        sides.append(conjugate(T, lo, dims, diffs, gls))
        # u_k = g o inclusion o F(g_src^{-1})
        comp = {}
        for j in range(length):
            fm = F.dim(hom[j]) + own[0][j]
            incl = block_matrix(T, [[Matrix.identity(T, fm)], [None]], [fm, dims[j] - fm], [fm])
            comp[lo + j] = gls[j] @ incl @ F.matrix(inverse(gls_src[k][j]))
        comps.append(comp)
    tar = binary(T, lo, dims, sides[0], sides[1])
    return rel_b(F, srcs, tar, comps)


def random_complex_with_automorphism(ring: Ring, seed=None, max_length: int = 3, max_dim: int = 2,
                                     lo: int | None = None, homology: bool = True):
    """A random complex and a random chain automorphism of it.

    On the standard form (identity pieces plus homology) the automorphism is
    block diagonal with one invertible block per piece; both are then
    conjugated by the same random change of basis.
    """
    from .complexes import ChainMap
    rng = as_rng(seed)
    length = rng.randint(2, max(2, max_length))
    lo = rng.randint(-1, 1) if lo is None else lo
    ranks = random_ranks(rng, length, max_dim)
    dims, diffs = _standard_diffs(ring, ranks)
    extra = [rng.randint(0, 1) if homology else 0 for _ in dims]
    hom_d = [Matrix.zeros(ring, extra[k], extra[k + 1]) for k in range(length - 1)]
    dims, diffs = _sum_standard(ring, [(dims, diffs), (extra, hom_d)])
    piece = [random_gl(ring, b, rng) for b in ranks]
    hom = [random_gl(ring, e, rng) for e in extra]
    auto = []
    for k in range(length):
        prev = piece[k - 1] if k else Matrix.zeros(ring, 0, 0)
        auto.append(block_matrix(ring, [[prev, None, None], [None, piece[k], None],
                                        [None, None, hom[k]]],
                                 [prev.rows, ranks[k], extra[k]], [prev.rows, ranks[k], extra[k]]))
    gls = [random_gl(ring, n, rng) for n in dims]
    c = chain(ring, lo, dims, conjugate(ring, lo, dims, diffs, gls))
    phi = {lo + k: gls[k] @ auto[k] @ inverse(gls[k]) for k in range(length)}
    return c, ChainMap(c, c, phi)
