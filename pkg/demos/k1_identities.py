"""The identities satisfied by classes of binary complexes, checked on examples.

Run with ``python3 demos/k1_identities.py``.
"""
import random

from binarytor.complexes import delta, shift, tau
from binarytor.io import matrix_to_json
from binarytor.fabricate import random_acyclic, random_acyclic_binary
from binarytor.matrix import Matrix, block_diag, det, random_gl, random_matrix
from binarytor.rings import GF, QQ
from binarytor.suites import random_acyclic_differentials
from binarytor.torsion import (auto_complex, cls, diffrot_product, elementary_product_witness,
                               product, rotation_matrix, signed_swap_factors, topbotiso_product,
                               transport)

F5 = GF(5)
rng = random.Random(2024)

# A diagonal binary complex (same differential twice) has trivial class.
c = random_acyclic(QQ, rng)
print("cls(delta c) =", cls(delta(c)), "  for c with ranks", c.dims)

# On automorphism complexes the class is the determinant, hence multiplicative.
t, p = random_gl(QQ, 3, rng), random_gl(QQ, 3, rng)
print("cls(A(t p)) =", cls(auto_complex(t @ p)), " cls(A(t)) cls(A(p)) =",
      cls(auto_complex(t)) * cls(auto_complex(p)))

# The swap [[0,-1],[1,0]] is a product of three elementary matrices.
fs = [e.matrix() for e in signed_swap_factors(QQ, 1, 2, 0, 1)]
print("\nfactors of the signed swap:", [matrix_to_json(f) for f in fs])
print("their product:", matrix_to_json(fs[0] @ fs[1] @ fs[2]))

# The block rotation moves the first summand to the end and intertwines the
# block sums of differentials.  It has determinant one and factors into elementaries.
ds = [random_matrix(F5, 2, 1, rng) for _ in range(3)]
S_out, S_in = rotation_matrix([2] * 3, F5), rotation_matrix([1] * 3, F5)
print("\nS (d1+d2+d3) == (d2+d3+d1) S:", S_out @ block_diag(F5, ds) == block_diag(F5, ds[1:] + ds[:1]) @ S_in)
print("det S =", det(S_in), " elementary factors:", len(elementary_product_witness(S_in)),
      " product matches:", product(F5, 3, elementary_product_witness(S_in)) == S_in)

# Tau and shift.
b = random_acyclic_binary(F5, rng)
print("\ncls(b) =", cls(b), " cls(tau b) =", cls(tau(b)), " cls(b[1]) =", cls(shift(b, 1)))

# Transporting a binary complex along isomorphisms f (top) and g (bottom)
# multiplies its class by an alternating product of det(f_i g_i^-1).
f = {n: random_gl(F5, b.dim(n), rng) for n in b.degrees}
g = {n: random_gl(F5, b.dim(n), rng) for n in b.degrees}
N = transport(b, f, g)
print("cls(N)/cls(b) =", cls(N) / cls(b), " product formula =", topbotiso_product(F5, f, g))

# Rotating the differentials among n copies of one graded object.
for n in (2, 3, 4):
    lo, dims, diffs = random_acyclic_differentials(F5, rng, n)
    perm = list(range(1, n)) + [0]
    print(f"n={n}: product of cls over the rotation =", diffrot_product(lo, dims, diffs, perm, F5))
