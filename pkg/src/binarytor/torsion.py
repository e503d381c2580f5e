"""Torsion of acyclic complexes and the class of an acyclic binary complex.

The class ``cls(b)`` of an acyclic binary complex is computed as
``torsion(top b) / torsion(bot b)``, a unit of the ground ring.  The torsion
of an acyclic complex ``c`` with contraction ``h`` is the determinant of
``d + h`` restricted to odd degrees -> even degrees, blocks in ascending
degree order.
"""
from __future__ import annotations

import random as _random
from dataclasses import dataclass
from typing import Sequence

from .complexes import (BinaryComplex, ChainComplex, is_acyclic, top, bot, binary, _span)
from .matrix import (Matrix, block_matrix, det, inverse, is_invertible, kernel_basis, solve,
                     random_matrix, NotInvertible, NoSolution)
from .rings import Ring


class NotAcyclic(ValueError):
    pass


class NonUnit(ArithmeticError):
    pass


class WrongShape(ValueError):
    pass


class NotFound(LookupError):
    pass


@dataclass(frozen=True)
class UnitClass:
    ring: Ring
    value: object

    def __post_init__(self):
        v = self.ring.coerce(self.value)
        if not self.ring.is_unit(v):
            raise NonUnit(f"{v} is not a unit of {self.ring.name}")
        object.__setattr__(self, "value", v)

    def __mul__(self, other: "UnitClass") -> "UnitClass":
        return UnitClass(self.ring, self.ring.normalize(self.value * other.value))

    def inverse(self) -> "UnitClass":
        return UnitClass(self.ring, self.ring.inv(self.value))

    def __truediv__(self, other: "UnitClass") -> "UnitClass":
        return self * other.inverse()

    def __pow__(self, k: int) -> "UnitClass":
        v = self.value if k >= 0 else self.ring.inv(self.value)
        out = self.ring.one()
        for _ in range(abs(k)):
            out = self.ring.normalize(out * v)
        return UnitClass(self.ring, out)

    def is_one(self) -> bool:
        return self.value == self.ring.one()

    def __str__(self):
        return str(self.value)


def unit_one(ring: Ring) -> UnitClass:
    return UnitClass(ring, 1)


# -- contractions ------------------------------------------------------------------

def contraction(c: ChainComplex, strategy: str = "pivot", rng=None) -> dict[int, Matrix]:
    """Maps ``h_n: c_n -> c_{n+1}`` with ``d h + h d = 1``.

    Built bottom up: ``d_{n+1} h_n = 1 - h_{n-1} d_n`` is solved for ``h_n``.
    ``"pivot"`` takes the particular solution with free variables zero;
    ``"random"`` adds a random element of the kernel of ``d_{n+1}``.
    """
    # every degree is solvable (the top one with zero right side) iff c is contractible
    ring = c.ring
    if strategy == "random":
        rng = rng if rng is not None else _random.Random(0)
    elif strategy != "pivot":
        raise ValueError(f"unknown contraction strategy {strategy!r}")
    h: dict[int, Matrix] = {}
    prev = Matrix.zeros(ring, c.dim(c.lo), c.dim(c.lo - 1))
    for n in c.degrees:
        rhs = Matrix.identity(ring, c.dim(n)) - prev @ c.diff(n)
        try:
            x = solve(c.diff(n + 1), rhs)
        except NoSolution:
            raise NotAcyclic(f"not acyclic: cannot split degree {n}") from None
        if strategy == "random" and x.rows:
            k = kernel_basis(c.diff(n + 1))
            if k.cols:
                x = x + k @ random_matrix(ring, k.cols, x.cols, rng)
        h[n] = x
        prev = x
    return h


def is_contraction(c: ChainComplex, h: dict[int, Matrix]) -> bool:
    ring = c.ring

    def hh(n):
        return h.get(n) or Matrix.zeros(ring, c.dim(n + 1), c.dim(n))

    return all(c.diff(n + 1) @ hh(n) + hh(n - 1) @ c.diff(n) == Matrix.identity(ring, c.dim(n))
               for n in c.degrees)


def torsion_matrix(c: ChainComplex, h: dict[int, Matrix]) -> Matrix:
    """``d + h`` from the odd degrees to the even degrees, ascending blocks."""
    ring = c.ring
    degs = list(c.degrees)
    odd = [n for n in degs if n % 2]
    even = [n for n in degs if not n % 2]
    blocks = []
    for m in even:
        row = []
        for n in odd:
            if m == n - 1:
                row.append(c.diff(n))
            elif m == n + 1:
                row.append(h.get(n) or Matrix.zeros(ring, c.dim(m), c.dim(n)))
            else:
                row.append(None)
        blocks.append(row)
    return block_matrix(ring, blocks, [c.dim(m) for m in even], [c.dim(n) for n in odd])


def torsion(c: ChainComplex, strategy: str = "pivot", rng=None) -> UnitClass:
    h = contraction(c, strategy, rng)
    t = torsion_matrix(c, h)
    if not t.is_square():
        raise NotAcyclic("odd and even parts differ in rank")
    v = det(t)
    if not c.ring.is_unit(v):
        raise NonUnit(f"torsion {v} is not a unit")
    return UnitClass(c.ring, v)


def cls(b: BinaryComplex, strategy: str = "pivot", rng=None) -> UnitClass:
    """The class of an acyclic binary complex as a unit of the ground ring."""
    return torsion(top(b), strategy, rng) / torsion(bot(b), strategy, rng)


# -- automorphisms as binary complexes ------------------------------------------------------

def auto_complex(theta: Matrix) -> BinaryComplex:
    """Two copies of the object in degrees 1 and 0, top ``theta``, bottom the identity."""
    if not is_invertible(theta):
        raise NotInvertible("auto_complex needs an automorphism")
    n = theta.rows
    return binary(theta.ring, 0, (n, n), [theta], [Matrix.identity(theta.ring, n)])


def two_term_to_auto(b: BinaryComplex) -> Matrix:
    """``f g^{-1}`` for a length one complex with top ``f`` and bottom ``g``."""
    support = b.support()
    if len(support) != 2 or support[1] != support[0] + 1:
        raise WrongShape("expected support in two consecutive degrees")
    n = support[1]
    f, g = b.diff_top(n), b.diff_bot(n)
    if not (is_invertible(f) and is_invertible(g)):
        raise WrongShape("differentials are not invertible")
    return f @ inverse(g)


# -- elementary matrices and the signed rotation -------------------------------------------------

def is_elementary(theta: Matrix, split: int) -> bool:
    """Is ``theta`` of the form ``[[1, *], [0, 1]]`` for the split ``split + rest``?"""
    if not theta.is_square() or not 0 <= split <= theta.rows:
        return False
    n = theta.rows
    for i in range(n):
        for j in range(n):
            x = theta[i, j]
            if i == j:
                if x != 1:
                    return False
            elif not (i < split <= j) and x != 0:
                return False
    return True


def elementary_support(theta: Matrix) -> tuple[list[int], list[int]] | None:
    """Coordinates ``(R, C)`` exhibiting ``theta`` as elementary, or ``None``.

    ``theta - 1`` must be supported on rows ``R`` and columns ``C`` with ``R``
    and ``C`` disjoint; then ``theta`` is ``[[1, *], [0, 1]]`` for the
    decomposition (span of ``R``) + (span of the rest).
    """
    if not theta.is_square():
        return None
    n = theta.rows
    R, C = set(), set()
    for i in range(n):
        for j in range(n):
            x = theta[i, j] - (1 if i == j else 0)
            if theta.ring.normalize(x) != 0:
                R.add(i)
                C.add(j)
    if R & C:
        return None
    return sorted(R), sorted(C)


def reorder_to_elementary(theta: Matrix) -> tuple[Matrix, int] | None:
    """Conjugate ``theta`` by a coordinate permutation into literal elementary form."""
    sup = elementary_support(theta)
    if sup is None:
        return None
    R = sup[0]
    order = R + [i for i in range(theta.rows) if i not in R]
    return theta.submatrix(order, order), len(R)


def rotation_matrix(blocks: Sequence[int], ring: Ring | None = None) -> Matrix:
    """The signed block permutation ``S`` with ``-1`` blocks above the diagonal
    and ``+1`` in the lower left corner.

    ``S (d_1 + ... + d_n) = (d_2 + ... + d_n + d_1) S``.
    """
    from .rings import ZZ
    ring = ring or ZZ
    blocks = list(blocks)
    if not blocks:
        raise ValueError("rotation_matrix needs at least one block")
    k = len(blocks)
    if k == 1:
        return Matrix.identity(ring, blocks[0])
    row_dims = blocks[1:] + blocks[:1]
    grid = [[None] * k for _ in range(k)]
    for i in range(k - 1):
        grid[i][i + 1] = -Matrix.identity(ring, blocks[i + 1])
    grid[k - 1][0] = Matrix.identity(ring, blocks[0])
    return block_matrix(ring, grid, row_dims, blocks)


@dataclass(frozen=True)
class Elementary:
    """``1 + c * sum E_{i,j}`` over ``pairs``, the row indices disjoint from the
    column indices, so that it is ``[[1, *], [0, 1]]`` after reordering."""
    ring: Ring
    n: int
    pairs: tuple
    c: object

    def __post_init__(self):
        rows = {i for i, _ in self.pairs}
        cols = {j for _, j in self.pairs}
        if rows & cols:
            raise ValueError("row and column indices of an elementary factor must be disjoint")

    def matrix(self) -> Matrix:
        rows = Matrix.identity(self.ring, self.n).tolist()
        for i, j in self.pairs:
            rows[i][j] = self.ring.normalize(rows[i][j] + self.c)
        return Matrix.from_rows(self.ring, rows) if self.n else Matrix.zeros(self.ring, 0, 0)

    def inverse(self) -> "Elementary":
        return Elementary(self.ring, self.n, self.pairs, self.ring.normalize(-self.c))

    def left_apply(self, rows: list) -> None:
        """``rows <- self @ rows`` in place (row ``i`` += ``c`` row ``j``)."""
        r = self.ring
        for i, j in self.pairs:
            rows[i] = [r.normalize(x + self.c * y) for x, y in zip(rows[i], rows[j])]

    def right_apply(self, rows: list) -> None:
        """``rows <- rows @ self`` in place (column ``j`` += ``c`` column ``i``)."""
        r = self.ring
        for row in rows:
            for i, j in self.pairs:
                if row[i]:
                    row[j] = r.normalize(row[j] + self.c * row[i])


def _block_elem(ring, b, k, i, j, c) -> Elementary:
    """Block identity plus ``c * I`` in block ``(i, j)`` (all blocks of size ``b``)."""
    return Elementary(ring, b * k, tuple((i * b + t, j * b + t) for t in range(b)), ring.coerce(c))


def signed_swap_factors(ring, b, k, i, j) -> list[Elementary]:
    """Block ``[[0, -1], [1, 0]]`` on blocks ``i, j`` as three elementary factors."""
    return [_block_elem(ring, b, k, j, i, 1), _block_elem(ring, b, k, i, j, -1),
            _block_elem(ring, b, k, j, i, 1)]


def product(ring: Ring, n: int, mats: Sequence) -> Matrix:
    """Product of matrices or :class:`Elementary` factors, left to right."""
    rows = Matrix.identity(ring, n).tolist()
    for m in mats:
        if isinstance(m, Elementary):
            m.right_apply(rows)
        else:
            rows = (Matrix.from_rows(ring, rows) @ m).tolist() if n else rows
    return Matrix.from_rows(ring, rows) if n else Matrix.zeros(ring, 0, 0)


def _signed_permutation_factors(S: Matrix) -> list[Elementary]:
    ring, n = S.ring, S.rows
    rows = S.tolist()
    perm = []
    for j in range(n):
        nz = [i for i in range(n) if rows[i][j] != 0]
        if len(nz) != 1 or rows[nz[0]][j] not in (1, ring.coerce(-1)):
            raise NotFound("not a signed permutation matrix")
        perm.append(nz[0])
    if sorted(perm) != list(range(n)):
        raise NotFound("not a signed permutation matrix")
    # left-multiply by signed swaps until the identity remains; record the ops
    ops: list[list[Elementary]] = []
    cur = [list(r) for r in rows]
    for k in range(n):
        r = next(i for i in range(n) if cur[i][k] != 0)
        if r != k:
            f = signed_swap_factors(ring, 1, n, k, r)  # rows k, r: k <- -r, r <- k
            ops.append(f)
            for e in reversed(f):
                e.left_apply(cur)
        if cur[k][k] != 1:
            if k == n - 1:
                raise NotFound("signed permutation with determinant -1")
            f = signed_swap_factors(ring, 1, n, k, n - 1) * 2
            ops.append(f)
            for e in reversed(f):
                e.left_apply(cur)
    # S = (op_m ... op_1)^{-1} = op_1^{-1} ... op_m^{-1}
    out = []
    for f in ops:
        out.extend(e.inverse() for e in reversed(f))
    return out


def elementary_product_witness(S: Matrix) -> list[Elementary]:
    """Elementary factors whose product is ``S``.

    Covers the identity, the signed block rotation (as a product of signed
    block transpositions, each three elementary factors) and more generally
    any signed permutation matrix of determinant one.
    """
    if not S.is_square():
        raise NotFound("not square")
    ring, n = S.ring, S.rows
    if S == Matrix.identity(ring, n):
        return []
    for k in range(2, n + 1):
        if n % k:
            continue
        b = n // k
        if S == rotation_matrix([b] * k, ring):
            out = []
            # S = T_{k-1,k} ... T_{1,2}
            for i in reversed(range(k - 1)):
                out.extend(signed_swap_factors(ring, b, k, i, i + 1))
            return out
    return _signed_permutation_factors(S)


# -- the K1 identities in executable form ----------------------------------------------------------

def transport(M: BinaryComplex, f: dict[int, Matrix], g: dict[int, Matrix]) -> BinaryComplex:
    """The binary complex ``N`` for which ``f: top M -> top N`` and
    ``g: bot M -> bot N`` are isomorphisms of complexes.

    ``d_N = f d_M f^{-1}`` on top and ``g d'_M g^{-1}`` on the bottom.
    """
    finv = {n: inverse(m) for n, m in f.items()}
    ginv = {n: inverse(m) for n, m in g.items()}
    hi = M.lo + len(M.dims)
    top_d = [f[n - 1] @ M.diff_top(n) @ finv[n] for n in range(M.lo + 1, hi)]
    bot_d = [g[n - 1] @ M.diff_bot(n) @ ginv[n] for n in range(M.lo + 1, hi)]
    return binary(M.ring, M.lo, M.dims, top_d, bot_d)


def topbotiso_product(ring: Ring, f: dict[int, Matrix], g: dict[int, Matrix]) -> UnitClass:
    """``prod_i cls(A(f_i g_i^{-1}))^((-1)^i)``, each factor through the oracle."""
    out = unit_one(ring)
    for n in sorted(f):
        u = cls(auto_complex(f[n] @ inverse(g[n])))
        out = out * (u if n % 2 == 0 else u.inverse())
    return out


def diffrot_objects(lo: int, dims: Sequence[int], diffs: Sequence[Sequence[Matrix]],
                    perm: Sequence[int]) -> list[BinaryComplex]:
    """``(N, d_k, d_{perm k})`` for each ``k``; ``diffs[k]`` lists ``d_k`` from ``lo + 1`` up."""
    ring = diffs[0][0].ring if diffs and diffs[0] else None
    return [binary(ring, lo, dims, diffs[k], diffs[perm[k]]) for k in range(len(diffs))]


def diffrot_product(lo: int, dims: Sequence[int], diffs: Sequence[Sequence[Matrix]],
                    perm: Sequence[int], ring: Ring) -> UnitClass:
    out = unit_one(ring)
    for b in diffrot_objects(lo, dims, diffs, perm):
        out = out * cls(b)
    return out
