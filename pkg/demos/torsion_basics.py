"""Acyclic complexes, torsion and the class of a binary complex.

Run with ``python3 demos/torsion_basics.py``.
"""
import random

from binarytor import complexes as cx
from binarytor.complexes import binary, chain, shift, tau
from binarytor.io import matrix_to_json
from binarytor.matrix import Matrix, det
from binarytor.rings import GF, QQ, ZZ
from binarytor.torsion import auto_complex, cls, contraction, torsion

# A complex is a list of ranks plus differentials; d_n leaves degree n.
d = Matrix.from_rows(QQ, [[2]])
c = chain(QQ, 0, (1, 1), [d])
print("0 -> Q -2-> Q -> 0 acyclic over QQ:", cx.is_acyclic(c))

# The same matrix over the integers has cokernel Z/2, so it is not acyclic there.
cz = chain(ZZ, 0, (1, 1), [Matrix.from_rows(ZZ, [[2]])])
print("0 -> Z -2-> Z -> 0 acyclic over ZZ:", cx.is_acyclic(cz))

# Torsion comes from a contraction h and det(d + h) between odd and even degrees.
# Any contraction gives the same answer.
c3 = chain(QQ, 0, (1, 2, 1), [Matrix.from_rows(QQ, [[1, 3]]), Matrix.from_rows(QQ, [[-3], [1]])])
print("\nh (pivot)  :", {n: matrix_to_json(m) for n, m in contraction(c3).items() if m.rows and m.cols})
print("torsion, pivot contraction :", torsion(c3))
print("torsion, random contraction:", torsion(c3, "random", random.Random(1)))

# A binary complex carries two differentials on one graded object.
# Its class is torsion(top) / torsion(bottom).
theta = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
a = auto_complex(theta)
print("\nA(theta) with theta = [[1,2],[3,4]]: cls =", cls(a), " det theta =", det(theta))

# Swapping the differentials inverts the class; shifting by one inverts it too.
print("cls(tau A)   =", cls(tau(a)))
print("cls(A[1])    =", cls(shift(a, 1)))
print("cls(A[2])    =", cls(shift(a, 2)))

# Two different differentials f, g on F7 in degrees 0, 1.
F7 = GF(7)
f = Matrix.from_rows(F7, [[2, 1], [0, 3]])
g = Matrix.from_rows(F7, [[1, 1], [1, 2]])
b = binary(F7, 0, (2, 2), [f], [g])
print("\nover F7: det f =", det(f), " det g =", det(g), " cls =", cls(b))

# Over ZZ every acyclic binary complex has class +1 or -1.
from binarytor.fabricate import random_acyclic_binary
print("\nclasses of ten random acyclic binary complexes over ZZ:",
      [str(cls(random_acyclic_binary(ZZ, s))) for s in range(10)])
