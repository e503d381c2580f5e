"""Dense exact matrices over a :class:`~binarytor.rings.Ring`.

A matrix acts on column vectors, so the composite ``g o f`` is ``G @ F``.
Everything here is immutable; operations return new matrices.
"""
from __future__ import annotations

import operator
import random as _random
from fractions import Fraction
from math import gcd as _gcd
from typing import Iterable, Sequence

from .rings import Ring, ZZ, QQ

_QZERO = Fraction(0)  # Fractions are immutable, so one shared zero is safe


class MatrixError(ValueError):
    pass


class DimensionMismatch(MatrixError):
    pass


class NonSquare(MatrixError):
    pass


class WrongRing(MatrixError):
    pass


class NotInvertible(MatrixError):
    pass


class NoSolution(MatrixError):
    pass


class Matrix:
    __slots__ = ("ring", "rows", "cols", "_data", "_hash")

    def __init__(self, ring: Ring, rows: int, cols: int, data: Iterable = (), *, _trusted=False):
        self.ring = ring
        self.rows = rows
        self.cols = cols
        if _trusted:
            self._data = data
        else:
            flat = [ring.coerce(x) for row in data for x in row] if rows and cols else []
            if len(flat) != rows * cols:
                raise DimensionMismatch(f"expected {rows}x{cols} entries, got {len(flat)}")
            self._data = tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))
        if len(self._data) != rows:
            # 0-column matrices still carry their empty rows
            self._data = tuple(() for _ in range(rows))
        self._hash = None

    # -- construction ---------------------------------------------------
    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(ring, len(rows), cols, rows)

    @classmethod
    def _raw(cls, ring, rows, cols, data) -> "Matrix":
        return cls(ring, rows, cols, tuple(tuple(r) for r in data), _trusted=True)

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        z = ring.zero()
        return cls._raw(ring, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero(), ring.one()
        return cls._raw(ring, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, ring: Ring, values: Sequence) -> "Matrix":
        n = len(values)
        z = ring.zero()
        vals = [ring.coerce(v) for v in values]
        return cls._raw(ring, n, n, [[vals[i] if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, ring: Ring, n: int, c) -> "Matrix":
        return cls.diag(ring, [c] * n)

    @classmethod
    def elementary(cls, ring: Ring, n: int, i: int, j: int, c) -> "Matrix":
        """Identity plus ``c`` in position ``(i, j)``, ``i != j``."""
        if i == j:
            raise MatrixError("elementary matrix needs i != j")
        rows = [list(r) for r in cls.identity(ring, n)._data]
        rows[i][j] = ring.coerce(c)
        return cls._raw(ring, n, n, rows)

    # -- access -----------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def tolist(self):
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix<{self.ring.name} {self.rows}x{self.cols}>[{body}]"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------
    def _check_ring(self, other):
        if self.ring != other.ring:
            raise WrongRing(f"{self.ring.name} vs {other.ring.name}")

    def _combine(self, other: "Matrix", op, symbol: str) -> "Matrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} {symbol} {other.shape}")
        n = self.ring.normalize
        # zero entries dominate block matrices; skipping them avoids rational arithmetic
        return Matrix._raw(self.ring, self.rows, self.cols,
                           [[n(op(a, b)) if b else a for a, b in zip(r, s)]
                            for r, s in zip(self._data, other._data)])

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, operator.add, "+")

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, operator.sub, "-")

    def __neg__(self) -> "Matrix":
        n = self.ring.normalize
        return Matrix._raw(self.ring, self.rows, self.cols,
                           [[n(-a) if a else a for a in r] for r in self._data])

    def scale(self, c) -> "Matrix":
        c = self.ring.coerce(c)
        n = self.ring.normalize
        return Matrix._raw(self.ring, self.rows, self.cols, [[n(c * a) for a in r] for r in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        if self.ring.kind == "Q":
            return self._matmul_rational(other)
        n = self.ring.normalize
        zero = self.ring.zero()
        # row-by-row over the nonzero entries; the matrices here are sparse
        sparse = [[(j, b) for j, b in enumerate(r) if b] for r in other._data]
        out = []
        for r in self._data:
            acc = [zero] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in sparse[k]:
                        acc[j] += a * b
            out.append([n(x) for x in acc])
        return Matrix._raw(self.ring, self.rows, other.cols, out)

    def _matmul_rational(self, other: "Matrix") -> "Matrix":
        # integer accumulation against a common denominator of ``other``
        D = 1
        for r in other._data:
            for x in r:
                d = x.denominator
                if d != 1:
                    D = D * d // _gcd(D, d)
        sparse = [[(j, b.numerator * (D // b.denominator)) for j, b in enumerate(r) if b]
                  for r in other._data]
        out = []
        for r in self._data:
            row, den = _clear_den(r)
            acc = [0] * other.cols
            for k, a in enumerate(row):
                if a:
                    for j, b in sparse[k]:
                        acc[j] += a * b
            q = den * D
            if q == 1:
                out.append([Fraction(x) if x else _QZERO for x in acc])
            else:
                out.append([Fraction(x, q) if x else _QZERO for x in acc])
        return Matrix._raw(self.ring, self.rows, other.cols, out)

    @property
    def T(self) -> "Matrix":
        data = list(zip(*self._data)) if self.rows else [[] for _ in range(self.cols)]
        return Matrix._raw(self.ring, self.cols, self.rows, data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.ring, len(rows), len(cols),
                           [[self._data[i][j] for j in cols] for i in rows])

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return self.submatrix(range(r0, r1), range(c0, c1))

    def map_ring(self, ring: Ring, hom=None) -> "Matrix":
        hom = hom or ring.coerce
        return Matrix._raw(ring, self.rows, self.cols, [[hom(x) for x in r] for r in self._data])

    def kron(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        n = self.ring.normalize
        out = []
        for r in self._data:
            for s in other._data:
                out.append([n(a * b) for a in r for b in s])
        return Matrix._raw(self.ring, self.rows * other.rows, self.cols * other.cols, out)

    def vec(self) -> "Matrix":
        """Column-major vectorization, as a single column."""
        return Matrix._raw(self.ring, self.rows * self.cols, 1,
                           [[self._data[i][j]] for j in range(self.cols) for i in range(self.rows)])


# -- block assembly -----------------------------------------------------------

def block_matrix(ring: Ring, blocks: Sequence[Sequence[Matrix | None]],
                 row_dims: Sequence[int] | None = None,
                 col_dims: Sequence[int] | None = None) -> Matrix:
    """Assemble a block matrix; ``None`` (or ``0``) entries are zero blocks."""
    nr = len(blocks)
    nc = len(blocks[0]) if nr else len(col_dims or ())
    row_dims = list(row_dims) if row_dims is not None else [None] * nr
    col_dims = list(col_dims) if col_dims is not None else [None] * nc
    for i, brow in enumerate(blocks):
        if len(brow) != nc:
            raise DimensionMismatch("ragged block rows")
        for j, b in enumerate(brow):
            if isinstance(b, Matrix):
                if row_dims[i] is None:
                    row_dims[i] = b.rows
                if col_dims[j] is None:
                    col_dims[j] = b.cols
                if (row_dims[i], col_dims[j]) != b.shape:
                    raise DimensionMismatch(f"block ({i},{j}) has shape {b.shape}")
    if None in row_dims or None in col_dims:
        raise DimensionMismatch("cannot infer every block dimension")
    z = ring.zero()
    out = []
    for i, brow in enumerate(blocks):
        for k in range(row_dims[i]):
            row = []
            for j, b in enumerate(brow):
                if isinstance(b, Matrix):
                    if b.ring != ring:
                        raise WrongRing(f"block ({i},{j}) over {b.ring.name}")
                    row.extend(b.row(k))
                else:
                    row.extend([z] * col_dims[j])
            out.append(row)
    return Matrix._raw(ring, sum(row_dims), sum(col_dims), out)


def block_diag(ring: Ring, mats: Sequence[Matrix]) -> Matrix:
    n = len(mats)
    return block_matrix(ring, [[mats[i] if i == j else None for j in range(n)] for i in range(n)],
                        [m.rows for m in mats], [m.cols for m in mats])


def hstack(ring: Ring, mats: Sequence[Matrix], rows: int | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(ring, rows or 0, 0)
    return block_matrix(ring, [list(mats)])


def vstack(ring: Ring, mats: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(ring, 0, cols or 0)
    return block_matrix(ring, [[m] for m in mats])


# -- elimination over fields ---------------------------------------------------

def _rref_rows(ring: Ring, rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field, in place on a list of lists."""
    if ring.kind == "Q":
        return _rref_rational(rows)
    n = ring.normalize
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.inv(rows[r][c])
        rows[r] = [n(x * inv) for x in rows[r]]
        nz = [(j, b) for j, b in enumerate(rows[r]) if b]
        for i in range(nrows):
            row = rows[i]
            if i != r and row[c] != 0:
                f = row[c]
                for j, b in nz:
                    row[j] = n(row[j] - f * b)
        pivots.append(c)
        r += 1
    return rows, pivots


def _clear_den(r) -> tuple[list[int], int]:
    """A rational row as integers over the lcm of its denominators."""
    den = 1
    for x in r:
        d = getattr(x, "denominator", 1)
        if d != 1:
            den = den * d // _gcd(den, d)
    if den == 1:
        return [int(x) for x in r], 1
    return [x.numerator * (den // x.denominator) if x else 0 for x in r], den


def _clear_row(r) -> list[int]:
    return _clear_den(r)[0]


def _rref_rational(rows: list[list]) -> tuple[list[list], list[int]]:
    """Gauss-Jordan over the rationals, done fraction-free on integer rows.

    Rows are cleared of denominators, eliminated with integer arithmetic
    and divided by their pivots only at the end.
    """
    ints = [_clear_row(r) for r in rows]
    nrows = len(ints)
    ncols = len(ints[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if ints[i][c]), None)
        if piv is None:
            continue
        ints[r], ints[piv] = ints[piv], ints[r]
        pr = ints[r]
        a = pr[c]
        nz = [(j, b) for j, b in enumerate(pr) if b]
        for i in range(nrows):
            row = ints[i]
            f = row[c]
            if i == r or not f:
                continue
            g = _gcd(a, f)
            ma, mf = a // g, f // g
            new = [x * ma for x in row] if ma != 1 else list(row)
            for j, b in nz:
                new[j] -= mf * b
            cont = 0
            for x in new:
                if x:
                    cont = _gcd(cont, x)
                    if cont == 1:
                        break
            ints[i] = [x // cont for x in new] if cont > 1 else new
        pivots.append(c)
        r += 1
    out = []
    for i, row in enumerate(ints):
        if i < len(pivots):
            a = row[pivots[i]]
            out.append([Fraction(x, a) if x else _QZERO for x in row])
        else:
            out.append([_QZERO] * ncols)
    return out, pivots


def _as_field_rows(m: Matrix) -> tuple[Ring, list[list]]:
    if m.ring.is_field:
        return m.ring, m.tolist()
    return QQ, [[QQ.coerce(x) for x in r] for r in m]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    ring, rows = _as_field_rows(m)
    rows, piv = _rref_rows(ring, rows)
    return Matrix._raw(ring, m.rows, m.cols, rows), piv


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Rows scaled by their common denominators (same row space)."""
    return [_clear_row(r) for r in m]


def _integer_rank(rows: list[list[int]]) -> int:
    """Fraction-free echelon form; each new row is divided by its content."""
    rows = [r for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        a = pr[c]
        nz = [(j, b) for j, b in enumerate(pr) if b and j > c]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            f = row[c]
            if f:
                new = [x * a for x in row]
                new[c] = 0
                for j, b in nz:
                    new[j] -= f * b
                g = 0
                for x in new:
                    if x:
                        g = _gcd(g, x)
                rows[i] = [x // g for x in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank(m: Matrix) -> int:
    """Exact rank; over the integers this is the rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.ring.kind in ("Q", "Z"):
        return _integer_rank(_integer_rows(m))
    ring, rows = _as_field_rows(m)
    return len(_rref_rows(ring, rows)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of the kernel (a lattice basis over the integers)."""
    if m.ring == ZZ:
        _, D, V = smith_normal_form(m)
        r = sum(1 for i in range(min(D.rows, D.cols)) if D[i, i] != 0)
        return V.submatrix(range(V.rows), range(r, V.cols))
    ring = m.ring
    rows, piv = _rref_rows(ring, m.tolist()) if m.rows else ([], [])
    free = [c for c in range(m.cols) if c not in piv]
    n = ring.normalize
    cols = []
    for f in free:
        v = [ring.zero()] * m.cols
        v[f] = ring.one()
        for i, pc in enumerate(piv):
            v[pc] = n(-rows[i][f])
        cols.append(v)
    return Matrix._raw(ring, m.cols, len(cols), [list(r) for r in zip(*cols)] if cols
                       else [[] for _ in range(m.cols)])


def det(m: Matrix):
    if not m.is_square():
        raise NonSquare(f"det of {m.rows}x{m.cols} matrix")
    ring = m.ring
    n = m.rows
    if n == 0:
        return ring.one()
    if ring.kind == "F":
        rows = m.tolist()
        p = ring.p
        d = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if piv is None:
                return 0
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = -d
            d = d * rows[c][c] % p
            inv = pow(rows[c][c], -1, p)
            for i in range(c + 1, n):
                if rows[i][c]:
                    f = rows[i][c] * inv % p
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[c])]
        return d % p
    # Bareiss, fraction free; over the rationals clear denominators first
    scale = 1
    rows = m.tolist()
    if ring == QQ:
        for i, r in enumerate(rows):
            rows[i], den = _clear_den(r)
            scale *= den
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if piv is None:
                return ring.zero()
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    d = sign * rows[n - 1][n - 1]
    if ring == QQ:
        from fractions import Fraction
        return Fraction(d, scale)
    return d


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise NonSquare("inverse of non-square matrix")
    try:
        return solve(m, Matrix.identity(m.ring, m.rows))
    except NoSolution:
        raise NotInvertible("matrix is not invertible over " + m.ring.name) from None


def is_invertible(m: Matrix) -> bool:
    return m.is_square() and m.ring.is_unit(det(m))


def solve(m: Matrix, b: Matrix) -> Matrix:
    """Return ``x`` with ``m @ x == b``; raise :class:`NoSolution` otherwise.

    Over the integers solvability is integral, decided through the Smith form.
    """
    if b.rows != m.rows:
        raise DimensionMismatch(f"m has {m.rows} rows, b has {b.rows}")
    m._check_ring(b)
    ring = m.ring
    if ring == ZZ:
        U, D, V = smith_normal_form(m)
        c = U @ b
        y = [[0] * b.cols for _ in range(m.cols)]
        for i in range(m.rows):
            dii = D[i, i] if i < min(D.rows, D.cols) else 0
            for k in range(b.cols):
                if dii == 0:
                    if c[i, k] != 0:
                        raise NoSolution("inconsistent system")
                elif c[i, k] % dii:
                    raise NoSolution("no integral solution")
                else:
                    y[i][k] = c[i, k] // dii
        return V @ Matrix._raw(ring, m.cols, b.cols, y)
    aug = [list(r) + list(s) for r, s in zip(m, b)]
    rows, piv = _rref_rows(ring, aug) if aug else ([], [])
    if any(p >= m.cols for p in piv):
        raise NoSolution("inconsistent system")
    x = [[ring.zero()] * b.cols for _ in range(m.cols)]
    for i, pc in enumerate(piv):
        x[pc] = list(rows[i][m.cols:])
    return Matrix._raw(ring, m.cols, b.cols, x)


# -- Smith normal form -----------------------------------------------------------

def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ m @ V == D`` over the integers.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative entries
    each dividing the next.
    """
    if m.ring != ZZ:
        raise WrongRing("Smith normal form needs an integer matrix")
    nr, nc = m.rows, m.cols
    A = m.tolist()
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    def qround(a, p):  # nearest-integer quotient, so remainders satisfy |r| <= |p|/2
        q, r = divmod(a, p)
        if 2 * abs(r) > abs(p):
            q += 1
        return q

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # bring the smallest entry of row t / column t to the pivot, then reduce
            i = min(range(t, nr), key=lambda i: abs(A[i][t]) if A[i][t] else float("inf"))
            j = min(range(t, nc), key=lambda j: abs(A[t][j]) if A[t][j] else float("inf"))
            if abs(A[t][j]) < abs(A[i][t]):  # A[t][t] != 0, so both minima are nonzero
                swap_cols(t, j)
            else:
                swap_rows(t, i)
            p = A[t][t]
            for i in range(t + 1, nr):
                if A[i][t]:
                    add_row(i, t, -qround(A[i][t], p))
            for j in range(t + 1, nc):
                if A[t][j]:
                    add_col(j, t, -qround(A[t][j], p))
            if any(A[i][t] for i in range(t + 1, nr)) or any(A[t][j] for j in range(t + 1, nc)):
                continue
            bad = next((i for i in range(t + 1, nr) for j in range(t + 1, nc) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return (Matrix._raw(ZZ, nr, nr, U), Matrix._raw(ZZ, nr, nc, A), Matrix._raw(ZZ, nc, nc, V))


def smith_invariants(m: Matrix) -> list[int]:
    _, D, _ = smith_normal_form(m)
    return [D[i, i] for i in range(min(D.rows, D.cols)) if D[i, i] != 0]


# -- random matrices ----------------------------------------------------------------

def random_invertible(ring: Ring, n: int, seed) -> Matrix:
    """Deterministic product of random elementary matrices (determinant 1)."""
    rng = seed if isinstance(seed, _random.Random) else _random.Random(seed)
    if n <= 1:
        return Matrix.identity(ring, n)
    rows = Matrix.identity(ring, n).tolist()
    norm = ring.normalize
    for _ in range(rng.randint(n, 3 * n)):
        i, j = rng.sample(range(n), 2)
        c = ring.random_unit(rng, 3)
        rows[i] = [norm(a + c * b) for a, b in zip(rows[i], rows[j])]
    return Matrix._raw(ring, n, n, rows)


def random_gl(ring: Ring, n: int, rng: _random.Random) -> Matrix:
    """Random invertible matrix whose determinant is a random unit."""
    d = Matrix.diag(ring, [ring.random_unit(rng) for _ in range(n)])
    return random_invertible(ring, n, rng) @ d @ random_invertible(ring, n, rng)


def random_matrix(ring: Ring, rows: int, cols: int, rng: _random.Random, bound: int = 3) -> Matrix:
    return Matrix._raw(ring, rows, cols,
                       [[ring.random_element(rng, bound) for _ in range(cols)] for _ in range(rows)])
