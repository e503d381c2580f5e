"""Reference computations that do not go through binarytor's elimination code.

Ranks, determinants and Smith invariants come from sympy.  Torsion is the
basis formula: pick lifts of a basis of each boundary module, take the
determinant of (boundaries | lifts) in every degree and multiply with
alternating exponents.  It differs from the (d + h) determinant by the sign
(-1)^(sum_n r_n r_{n+1}), r_n = rank d_n.
"""
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import smith_normal_form as _sympy_snf
from sympy.polys.domains import GF as _GF, QQ as _QQ, ZZ as _ZZ
from sympy.polys.matrices import DomainMatrix


def _domain(ring):
    if ring.kind == "F":
        return _GF(ring.p)
    return _QQ if ring.kind == "Q" else _ZZ


def _dm(m, ring=None):
    ring = ring or m.ring
    K = _domain(ring)
    rows = [[K.convert(sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)) if ring.kind != "F"
             else K(int(x)) for x in r] for r in m.tolist()]
    return DomainMatrix(rows, (m.rows, m.cols), K)


def rank(m) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    dm = _dm(m)
    if m.ring.kind == "Z":
        dm = dm.convert_to(_QQ)
    return dm.rank()


def det(m):
    if m.rows == 0:
        return 1
    v = _dm(m).det()
    if m.ring.kind == "F":
        return int(v) % m.ring.p
    return Fraction(int(sympy.Rational(v).p), int(sympy.Rational(v).q))


def smith_invariants(m) -> list[int]:
    if m.rows == 0 or m.cols == 0:
        return []
    D = _sympy_snf(sympy.Matrix(m.tolist()), domain=_ZZ)
    return [abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0]


def _pivot_columns(m) -> list[int]:
    if m.rows == 0 or m.cols == 0:
        return []
    dm = _dm(m)
    if m.ring.kind == "Z":
        dm = dm.convert_to(_QQ)
    return list(dm.rref()[1])


def basis_torsion(c):
    """Torsion of an acyclic complex by the boundary-and-lift basis formula."""
    from binarytor.matrix import Matrix, hstack
    ring = c.ring
    lifts = {n: _pivot_columns(c.diff(n)) for n in range(c.lo, c.hi + 2)}
    value = Fraction(1) if ring.kind != "F" else 1
    sign_exp = 0
    for n in c.degrees:
        e = Matrix.identity(ring, c.dim(n))
        bnd = c.diff(n + 1).submatrix(range(c.dim(n)), lifts[n + 1])
        lift = e.submatrix(range(c.dim(n)), lifts[n])
        B = hstack(ring, [bnd, lift], c.dim(n))
        v = det(B)
        if ring.kind == "F":
            value = value * (v if n % 2 == 0 else pow(v, -1, ring.p)) % ring.p
        else:
            value = value * v if n % 2 == 0 else value / v
        sign_exp += len(lifts[n]) * len(lifts[n + 1])
    if sign_exp % 2:
        value = -value % ring.p if ring.kind == "F" else -value
    return value
