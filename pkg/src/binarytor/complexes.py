"""Bounded graded objects, chain complexes and binary chain complexes.

Degree ``n`` of an object is a free module of rank ``dims[n - lo]``.  The
differential ``d_n`` goes from degree ``n`` to degree ``n - 1``.

Sign conventions used throughout the package:

* ``shift(c, i)`` has ``shift(c, i)_n = c_{n+i}`` and differential
  ``(-1)**i * d``; in particular ``c[-1]`` is the suspension.
* ``Cone(f)_n = c'_n + c_{n-1}`` with differential ``[[d', f], [0, -d]]``.
* The total complex of a complex of complexes multiplies the differential of
  the ``i``-th inner complex by ``(-1)**i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .matrix import (Matrix, block_diag, block_matrix, rank, smith_invariants,
                     is_invertible, DimensionMismatch)
from .rings import Ring, ZZ


class InvalidComplex(ValueError):
    pass


class RingMismatch(ValueError):
    pass


class NotAChainMap(ValueError):
    pass


class InvalidBicomplex(ValueError):
    pass


def _sign(i: int) -> int:
    return -1 if i % 2 else 1


def _signed(m: Matrix, i: int) -> Matrix:
    return -m if i % 2 else m


# -- graded objects -------------------------------------------------------------

@dataclass(frozen=True)
class GradedObject:
    ring: Ring
    lo: int
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        if any(x < 0 for x in self.dims):
            raise InvalidComplex("negative dimension")

    @property
    def hi(self) -> int:
        return self.lo + len(self.dims) - 1

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def dim(self, n: int) -> int:
        if self.lo <= n <= self.hi:
            return self.dims[n - self.lo]
        return 0

    def graded(self) -> "GradedObject":
        return GradedObject(self.ring, self.lo, self.dims)

    def support(self) -> list[int]:
        return [n for n in self.degrees if self.dim(n)]

    def total_dim(self) -> int:
        return sum(self.dims)

    def same_grading(self, other: "GradedObject") -> bool:
        return self.ring == other.ring and all(
            self.dim(n) == other.dim(n) for n in _span(self, other))


def _span(*objs) -> range:
    lo = min((o.lo for o in objs if o.dims), default=0)
    hi = max((o.hi for o in objs if o.dims), default=-1)
    return range(lo, hi + 1)


def _diff_tuple(g: GradedObject, diffs) -> tuple[Matrix, ...]:
    """Normalize a differential given as dict ``{n: d_n}`` or a sequence for
    ``n = lo+1 .. hi`` into the aligned tuple."""
    if isinstance(diffs, Mapping):
        out = []
        for n in range(g.lo + 1, g.hi + 1):
            out.append(diffs.get(n) or Matrix.zeros(g.ring, g.dim(n - 1), g.dim(n)))
        extra = [n for n, m in diffs.items() if not (g.lo < n <= g.hi) and not m.is_zero()]
        if extra:
            raise InvalidComplex(f"differentials outside the support at degrees {extra}")
    else:
        out = list(diffs)
        if len(out) != max(len(g.dims) - 1, 0):
            raise InvalidComplex(f"expected {max(len(g.dims) - 1, 0)} differentials, got {len(out)}")
    for k, m in enumerate(out):
        n = g.lo + 1 + k
        if m.ring != g.ring:
            raise RingMismatch(f"d_{n} over {m.ring.name}, object over {g.ring.name}")
        if m.shape != (g.dim(n - 1), g.dim(n)):
            raise InvalidComplex(f"d_{n} has shape {m.shape}, expected {(g.dim(n - 1), g.dim(n))}")
    return tuple(out)


@dataclass(frozen=True)
class ChainComplex(GradedObject):
    d: tuple[Matrix, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "d", _diff_tuple(self, self.d))

    def diff(self, n: int) -> Matrix:
        if self.lo < n <= self.hi:
            return self.d[n - self.lo - 1]
        return Matrix.zeros(self.ring, self.dim(n - 1), self.dim(n))

    def differentials(self) -> dict[int, Matrix]:
        return {n: self.diff(n) for n in range(self.lo + 1, self.hi + 1)}

    def __repr__(self):
        return f"ChainComplex({self.ring.name}, lo={self.lo}, dims={self.dims})"


@dataclass(frozen=True)
class BinaryComplex(GradedObject):
    d_top: tuple[Matrix, ...] = ()
    d_bot: tuple[Matrix, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "d_top", _diff_tuple(self, self.d_top))
        object.__setattr__(self, "d_bot", _diff_tuple(self, self.d_bot))

    def diff_top(self, n: int) -> Matrix:
        return top(self).diff(n)

    def diff_bot(self, n: int) -> Matrix:
        return bot(self).diff(n)

    def __repr__(self):
        return f"BinaryComplex({self.ring.name}, lo={self.lo}, dims={self.dims})"


def chain(ring: Ring, lo: int, dims: Sequence[int], diffs=()) -> ChainComplex:
    return ChainComplex(ring, lo, tuple(dims), diffs)


def binary(ring: Ring, lo: int, dims: Sequence[int], d_top=(), d_bot=()) -> BinaryComplex:
    return BinaryComplex(ring, lo, tuple(dims), d_top, d_bot)


def zero_complex(ring: Ring) -> ChainComplex:
    return ChainComplex(ring, 0, ())


def concentrated(ring: Ring, degree: int, dim: int) -> ChainComplex:
    return ChainComplex(ring, degree, (dim,))


def regrade(c, lo: int, hi: int):
    """Same object, with support bounds widened (or trimmed of zeros) to ``[lo, hi]``."""
    dims = tuple(c.dim(n) for n in range(lo, hi + 1))
    if any(c.dim(n) for n in c.degrees if not lo <= n <= hi):
        raise InvalidComplex("regrade would drop a nonzero degree")
    g = GradedObject(c.ring, lo, dims)
    if isinstance(c, BinaryComplex):
        return BinaryComplex(c.ring, lo, dims, _restrict(c, top(c), g), _restrict(c, bot(c), g))
    if isinstance(c, ChainComplex):
        return ChainComplex(c.ring, lo, dims, _restrict(c, c, g))
    return g


def _restrict(_c, cc: ChainComplex, g: GradedObject):
    return {n: cc.diff(n) for n in range(g.lo + 1, g.hi + 1)}


# -- the functors gr, top, bot, tau, delta ------------------------------------------

def gr(x: GradedObject) -> GradedObject:
    return GradedObject(x.ring, x.lo, x.dims)


def top(b: BinaryComplex) -> ChainComplex:
    return ChainComplex(b.ring, b.lo, b.dims, b.d_top)


def bot(b: BinaryComplex) -> ChainComplex:
    return ChainComplex(b.ring, b.lo, b.dims, b.d_bot)


def tau(b: BinaryComplex) -> BinaryComplex:
    return BinaryComplex(b.ring, b.lo, b.dims, b.d_bot, b.d_top)


def delta(c: ChainComplex) -> BinaryComplex:
    return BinaryComplex(c.ring, c.lo, c.dims, c.d, c.d)


def make_binary(t: ChainComplex, b: ChainComplex) -> BinaryComplex:
    """The binary complex with the given top and bottom complexes (same grading)."""
    if not t.same_grading(b):
        raise InvalidComplex("top and bottom complexes live on different graded objects")
    lo, hi = _span(t, b).start, _span(t, b).stop - 1
    t, b = regrade(t, lo, hi), regrade(b, lo, hi)
    return BinaryComplex(t.ring, lo, t.dims, t.d, b.d)


def is_diagonal(b: BinaryComplex) -> bool:
    return b.d_top == b.d_bot


# -- validation and acyclicity ------------------------------------------------------------

def validate_chain(c: ChainComplex) -> list[str]:
    """Violations of the chain complex axioms; an empty list means valid."""
    problems = []
    for n in range(c.lo + 1, c.hi + 1):
        d = c.diff(n)
        if d.shape != (c.dim(n - 1), c.dim(n)):
            problems.append(f"d_{n} has shape {d.shape}")
    if problems:
        return problems
    for n in range(c.lo + 2, c.hi + 1):
        if not (c.diff(n - 1) @ c.diff(n)).is_zero():
            problems.append(f"d_{n - 1} d_{n} != 0")
    return problems


def validate_binary(b: BinaryComplex) -> list[str]:
    return ([f"top: {p}" for p in validate_chain(top(b))]
            + [f"bottom: {p}" for p in validate_chain(bot(b))])


def validate(x) -> list[str]:
    if isinstance(x, BinaryComplex):
        return validate_binary(x)
    return validate_chain(x)


def _exact_at(c: ChainComplex, n: int) -> bool:
    din, dout = c.diff(n + 1), c.diff(n)
    if rank(din) + rank(dout) != c.dim(n):
        return False
    if c.ring == ZZ and din.rows and din.cols:
        return all(abs(s) == 1 for s in smith_invariants(din))
    return True


def is_acyclic(c) -> bool:
    """Exactness in every degree; binary complexes need both differentials exact.

    Over the integers the image of ``d_{n+1}`` must equal the kernel of
    ``d_n`` as lattices, which given the rank identity amounts to ``d_{n+1}``
    having unit Smith invariants.
    """
    if isinstance(c, BinaryComplex):
        return is_acyclic(top(c)) and is_acyclic(bot(c))
    problems = validate_chain(c)
    if problems:
        raise InvalidComplex("; ".join(problems))
    return all(_exact_at(c, n) for n in c.degrees)


def is_exact_sequence(ring: Ring, maps: Sequence[Matrix]) -> bool:
    """Is ``0 -> V_0 -> V_1 -> ... -> V_k -> 0`` exact, for ``maps = [V_0->V_1, ...]``?"""
    if not maps:
        return True
    dims = [maps[0].cols] + [m.rows for m in maps]
    for a, b in zip(maps, maps[1:]):
        if a.rows != b.cols:
            return False
    k = len(maps)
    # V_j sits in degree k - j so the maps lower degree
    c = ChainComplex(ring, 0, tuple(reversed(dims)), list(reversed(maps)))
    if validate_chain(c):
        return False
    return is_acyclic(c)


def euler_char(c: GradedObject) -> int:
    return sum(_sign(n) * c.dim(n) for n in c.degrees)


# -- shift and direct sum ---------------------------------------------------------------------

def shift(c, i: int):
    """``shift(c, i)_n = c_{n+i}``, differentials multiplied by ``(-1)**i``."""
    if i == 0:
        return c
    lo = c.lo - i
    if isinstance(c, BinaryComplex):
        return BinaryComplex(c.ring, lo, c.dims, tuple(_signed(m, i) for m in c.d_top),
                             tuple(_signed(m, i) for m in c.d_bot))
    if isinstance(c, ChainComplex):
        return ChainComplex(c.ring, lo, c.dims, tuple(_signed(m, i) for m in c.d))
    return GradedObject(c.ring, lo, c.dims)


def _sum_diffs(a: ChainComplex, b: ChainComplex, lo: int, hi: int):
    return {n: block_diag(a.ring, [a.diff(n), b.diff(n)]) for n in range(lo + 1, hi + 1)}


def direct_sum(a, b):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring.name} vs {b.ring.name}")
    if not a.dims:
        return b
    if not b.dims:
        return a
    span = _span(a, b)
    lo, hi = span.start, span.stop - 1
    dims = tuple(a.dim(n) + b.dim(n) for n in span)
    if isinstance(a, BinaryComplex) and isinstance(b, BinaryComplex):
        return BinaryComplex(a.ring, lo, dims, _sum_diffs(top(a), top(b), lo, hi),
                             _sum_diffs(bot(a), bot(b), lo, hi))
    if isinstance(a, ChainComplex) and isinstance(b, ChainComplex):
        return ChainComplex(a.ring, lo, dims, _sum_diffs(a, b, lo, hi))
    if type(a) is GradedObject and type(b) is GradedObject:
        return GradedObject(a.ring, lo, dims)
    raise TypeError("direct_sum needs two objects of the same kind")


def direct_sum_all(ring: Ring, objs: Sequence, kind=None):
    out = None
    for o in objs:
        out = o if out is None else direct_sum(out, o)
    if out is None:
        z = zero_complex(ring)
        return delta(z) if kind is BinaryComplex else z
    return out


# -- chain maps -----------------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainMap:
    """A degree-preserving family of matrices ``source_n -> target_n``.

    Between binary complexes this is a single graded map; being a chain map
    then means commuting with both differentials.
    """
    source: GradedObject
    target: GradedObject
    maps: tuple = field(default=())

    def __post_init__(self):
        if self.source.ring != self.target.ring:
            raise RingMismatch("chain map between different rings")
        given = dict(self.maps) if not isinstance(self.maps, Mapping) else dict(self.maps)
        span = _span(self.source, self.target)
        out = []
        for n in span:
            shape = (self.target.dim(n), self.source.dim(n))
            m = given.pop(n, None)
            if m is None:
                m = Matrix.zeros(self.source.ring, *shape)
            if m.shape != shape:
                raise DimensionMismatch(f"component {n} has shape {m.shape}, expected {shape}")
            out.append((n, m))
        for n, m in given.items():
            if not m.is_zero():
                raise DimensionMismatch(f"component in degree {n} outside the support")
        object.__setattr__(self, "maps", tuple(out))

    @property
    def ring(self) -> Ring:
        return self.source.ring

    def at(self, n: int) -> Matrix:
        for k, m in self.maps:
            if k == n:
                return m
        return Matrix.zeros(self.ring, self.target.dim(n), self.source.dim(n))

    def as_dict(self) -> dict[int, Matrix]:
        return dict(self.maps)

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        if not self.source.same_grading(other.target):
            raise DimensionMismatch("composing maps with mismatched gradings")
        span = _span(other.source, self.target, self.source)
        return ChainMap(other.source, self.target, {n: self.at(n) @ other.at(n) for n in span})

    def __neg__(self):
        return ChainMap(self.source, self.target, {n: -m for n, m in self.maps})

    def __add__(self, other: "ChainMap"):
        return ChainMap(self.source, self.target,
                        {n: self.at(n) + other.at(n) for n in _span(self.source, self.target)})


def identity_map(c: GradedObject) -> ChainMap:
    return ChainMap(c, c, {n: Matrix.identity(c.ring, c.dim(n)) for n in c.degrees})


def zero_map(a: GradedObject, b: GradedObject) -> ChainMap:
    return ChainMap(a, b, {})


def _commutes(f: ChainMap, src: ChainComplex, tar: ChainComplex) -> bool:
    for n in _span(src, tar):
        if tar.diff(n) @ f.at(n) != f.at(n - 1) @ src.diff(n):
            return False
    return True


def is_chain_map(f: ChainMap) -> bool:
    s, t = f.source, f.target
    if isinstance(s, BinaryComplex) and isinstance(t, BinaryComplex):
        return _commutes(f, top(s), top(t)) and _commutes(f, bot(s), bot(t))
    return _commutes(f, s, t)


def is_isomorphism(f: ChainMap) -> bool:
    return is_chain_map(f) and all(
        is_invertible(f.at(n)) for n in _span(f.source, f.target))


def shift_map(f: ChainMap, i: int) -> ChainMap:
    return ChainMap(shift(f.source, i), shift(f.target, i),
                    {n - i: m for n, m in f.maps})


def direct_sum_map(f: ChainMap, g: ChainMap) -> ChainMap:
    s, t = direct_sum(f.source, g.source), direct_sum(f.target, g.target)
    return ChainMap(s, t, {n: block_diag(f.ring, [f.at(n), g.at(n)]) for n in _span(s, t)})


def as_top(f: ChainMap) -> ChainMap:
    return ChainMap(top(f.source), top(f.target), f.maps)


def as_bot(f: ChainMap) -> ChainMap:
    return ChainMap(bot(f.source), bot(f.target), f.maps)


# -- mapping cones ---------------------------------------------------------------------------------

def _cone_parts(f: ChainMap, src: ChainComplex, tar: ChainComplex):
    ring = f.ring
    span = _span(src, shift(src, -1), tar)
    lo, hi = span.start, span.stop - 1
    dims = tuple(tar.dim(n) + src.dim(n - 1) for n in span)
    diffs = {}
    for n in range(lo + 1, hi + 1):
        diffs[n] = block_matrix(ring, [[tar.diff(n), f.at(n - 1)], [None, -src.diff(n - 1)]],
                                [tar.dim(n - 1), src.dim(n - 2)], [tar.dim(n), src.dim(n - 1)])
    return lo, dims, diffs


def mapping_cone(f: ChainMap):
    """``Cone(f)_n = target_n + source_{n-1}`` with differential ``[[d', f], [0, -d]]``.

    For a map of binary complexes the result is the binary cone.
    """
    if not is_chain_map(f):
        raise NotAChainMap("mapping cone of a non chain map")
    s, t = f.source, f.target
    if isinstance(s, BinaryComplex):
        return binary_cone(as_top(f), as_bot(f))
    lo, dims, diffs = _cone_parts(f, s, t)
    return ChainComplex(f.ring, lo, dims, diffs)


def binary_cone(f_top: ChainMap, f_bot: ChainMap) -> BinaryComplex:
    """The binary complex whose top and bottom are ``Cone(f_top)`` and ``Cone(f_bot)``.

    Needs the two sources and the two targets to share gradings, so that the
    two cones live on one graded object.
    """
    for f in (f_top, f_bot):
        if not is_chain_map(f):
            raise NotAChainMap("binary cone of a non chain map")
    if not (f_top.source.same_grading(f_bot.source) and f_top.target.same_grading(f_bot.target)):
        raise InvalidComplex("the two maps do not share gradings")
    return make_binary(mapping_cone(f_top), mapping_cone(f_bot))


def cone_inclusion(f: ChainMap) -> ChainMap:
    """The canonical map ``target -> Cone(f)``."""
    cone = mapping_cone(f)
    t, s = f.target, f.source
    return ChainMap(t, cone, {n: block_matrix(f.ring, [[Matrix.identity(f.ring, t.dim(n))], [None]],
                                              [t.dim(n), s.dim(n - 1)], [t.dim(n)])
                              for n in _span(t, cone)})


def cone_projection(f: ChainMap) -> ChainMap:
    """The canonical map ``Cone(f) -> source[-1]``."""
    cone = mapping_cone(f)
    t, s = f.target, f.source
    return ChainMap(cone, shift(s, -1),
                    {n: block_matrix(f.ring, [[None, Matrix.identity(f.ring, s.dim(n - 1))]],
                                     [s.dim(n - 1)], [t.dim(n), s.dim(n - 1)])
                     for n in _span(cone, shift(s, -1))})


def is_quasi_iso(f: ChainMap) -> bool:
    if not is_chain_map(f):
        raise NotAChainMap("not a chain map")
    return is_acyclic(mapping_cone(f))


# -- complexes of complexes ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexOfComplexes:
    """Rows ``i = ilo .. ihi``, each a chain or binary complex, joined by
    vertical chain maps ``row_i -> row_{i-1}``.

    ``vertical[i]`` is a tuple of one or two degree families (dicts
    ``j -> matrix``).  With two families, or binary rows, the total complex
    is binary: its top uses the first family and the rows' top
    differentials, its bottom the last family and the bottom differentials.
    """
    ilo: int
    rows: tuple
    vertical: tuple = ()

    @property
    def ring(self) -> Ring:
        return self.rows[0].ring

    @property
    def ihi(self) -> int:
        return self.ilo + len(self.rows) - 1

    def row(self, i: int):
        if self.ilo <= i <= self.ihi:
            return self.rows[i - self.ilo]
        return None

    def families(self, i: int):
        """The vertical families leaving row ``i``."""
        if self.ilo < i <= self.ihi:
            fam = self.vertical[i - self.ilo - 1]
            return fam if isinstance(fam, tuple) else (fam,)
        return None

    @property
    def is_binary(self) -> bool:
        if any(isinstance(r, BinaryComplex) for r in self.rows):
            return True
        return any(len(self.families(i)) == 2 for i in range(self.ilo + 1, self.ihi + 1))

    def side(self, which: int) -> tuple[list[ChainComplex], list[dict]]:
        """Rows and vertical maps of the top (0) or bottom (1) side."""
        rows = []
        for r in self.rows:
            if isinstance(r, BinaryComplex):
                rows.append(top(r) if which == 0 else bot(r))
            else:
                rows.append(r)
        verts = []
        for i in range(self.ilo + 1, self.ihi + 1):
            fam = self.families(i)
            verts.append(dict(fam[0] if which == 0 else fam[-1]))
        return rows, verts


def _vmap(vert: dict, j: int, ring, rows_to: int, cols_from: int) -> Matrix:
    m = vert.get(j)
    return m if m is not None else Matrix.zeros(ring, rows_to, cols_from)


def validate_bicomplex(cc: ComplexOfComplexes) -> list[str]:
    problems = []
    for r in cc.rows:
        problems += validate(r)
    ring = cc.ring
    for which in (0, 1):
        rows, verts = cc.side(which)
        for k, v in enumerate(verts):
            i = cc.ilo + 1 + k
            a, b = rows[k + 1], rows[k]  # row i -> row i-1
            for j in _span(a, b):
                m = _vmap(v, j, ring, b.dim(j), a.dim(j))
                if m.shape != (b.dim(j), a.dim(j)):
                    problems.append(f"vertical map at ({i},{j}) has shape {m.shape}")
                    continue
                if b.diff(j) @ m != _vmap(v, j - 1, ring, b.dim(j - 1), a.dim(j - 1)) @ a.diff(j):
                    problems.append(f"square at ({i},{j}) does not commute")
            if k + 1 < len(verts):
                w = verts[k + 1]
                c = rows[k + 2]
                for j in _span(c, b):
                    left = _vmap(v, j, ring, b.dim(j), a.dim(j)) @ _vmap(w, j, ring, a.dim(j), c.dim(j))
                    if not left.is_zero():
                        problems.append(f"vertical maps compose to nonzero at ({i + 1},{j})")
    return problems


def _total_side(cc: ComplexOfComplexes, rows: list[ChainComplex], verts: list[dict]) -> ChainComplex:
    ring = cc.ring
    ilo = cc.ilo
    idx = range(ilo, ilo + len(rows))
    ns = [i + j for i, r in zip(idx, rows) for j in r.degrees]
    lo, hi = (min(ns), max(ns)) if ns else (0, -1)

    def comps(n):
        return [(i, n - i, rows[i - ilo].dim(n - i)) for i in idx]

    dims = tuple(sum(c[2] for c in comps(n)) for n in range(lo, hi + 1))
    diffs = {}
    for n in range(lo + 1, hi + 1):
        src, tar = comps(n), comps(n - 1)
        blocks = []
        for (ti, tj, tdim) in tar:
            brow = []
            for (si, sj, sdim) in src:
                if ti == si:  # horizontal, inside row si
                    brow.append(_signed(rows[si - ilo].diff(sj), si))
                elif ti == si - 1 and tj == sj:
                    brow.append(_vmap(verts[si - ilo - 1], sj, ring, tdim, sdim))
                else:
                    brow.append(None)
            blocks.append(brow)
        diffs[n] = block_matrix(ring, blocks, [c[2] for c in tar], [c[2] for c in src])
    return ChainComplex(ring, lo, dims, diffs)


def total_complex(cc: ComplexOfComplexes):
    """``Tot_n`` is the sum over ``i + j = n`` ordered by ascending row index ``i``;
    the differential is the vertical map plus ``(-1)**i`` times the row differential."""
    problems = validate_bicomplex(cc)
    if problems:
        raise InvalidBicomplex("; ".join(problems))
    t = _total_side(cc, *cc.side(0))
    if not cc.is_binary:
        return t
    return make_binary(t, _total_side(cc, *cc.side(1)))


def total_map(src: ComplexOfComplexes, tar: ComplexOfComplexes, maps: dict) -> ChainMap:
    """Total map of a family ``maps[i]`` (ChainMaps ``src.row(i) -> tar.row(i)``)."""
    ring = src.ring
    s_tot, t_tot = total_complex(src), total_complex(tar)
    out = {}
    for n in _span(s_tot, t_tot):
        rows_i = range(min(src.ilo, tar.ilo), max(src.ihi, tar.ihi) + 1)
        blocks = []
        rd, cd = [], []
        for ti in rows_i:
            tr = tar.row(ti)
            rd.append(tr.dim(n - ti) if tr is not None else 0)
        for si in rows_i:
            sr = src.row(si)
            cd.append(sr.dim(n - si) if sr is not None else 0)
        for a, ti in enumerate(rows_i):
            brow = []
            for b, si in enumerate(rows_i):
                if ti == si and si in maps:
                    brow.append(maps[si].at(n - si))
                else:
                    brow.append(None)
            blocks.append(brow)
        out[n] = block_matrix(ring, blocks, rd, cd)
    return ChainMap(s_tot, t_tot, out)


# -- filtrations ---------------------------------------------------------------------------------------------

def naive_filtration_pieces(b: BinaryComplex) -> list[BinaryComplex]:
    """Subquotients of the degreewise filtration: each degree on its own,
    with zero differentials."""
    return [BinaryComplex(b.ring, n, (b.dim(n),)) for n in b.degrees]


def same_complex(a, b) -> bool:
    """Equal up to the stored support bounds (zero degrees at the ends)."""
    if type(a) is not type(b) or not a.same_grading(b):
        return False
    if isinstance(a, BinaryComplex):
        return same_complex(top(a), top(b)) and same_complex(bot(a), bot(b))
    if isinstance(a, ChainComplex):
        return all(a.diff(n) == b.diff(n) for n in _span(a, b))
    return True


def same_map(f: ChainMap, g: ChainMap) -> bool:
    return (same_complex(f.source, g.source) and same_complex(f.target, g.target)
            and all(f.at(n) == g.at(n) for n in _span(f.source, f.target, g.source, g.target)))
