"""Binary chain complexes over exact matrix categories, K1 classes through
torsion, and self-checking witnesses for relative K0 identities.

Submodules::

    rings       QQ, ZZ and prime fields
    matrix      exact matrices and elimination
    complexes   graded objects, chain and binary complexes, cones, totals
    torsion     contractions, torsion, cls and elementary factorizations
    relative    functors, the categories C[F] and B[F], maps of pairs
    proofs      witness bundles
    fabricate   seeded random inputs
    io          JSON documents
    suites      named property suites
    cli         the ``binarytor`` command
"""
from .rings import QQ, ZZ, GF, Ring, parse_ring
from .matrix import Matrix, det, rank, solve, kernel_basis, smith_normal_form, random_invertible
from .complexes import (ChainComplex, BinaryComplex, ChainMap, ComplexOfComplexes, chain, binary,
                        shift, direct_sum, top, bot, tau, delta, is_acyclic, is_diagonal,
                        mapping_cone, binary_cone, total_complex, euler_char)
from .torsion import (UnitClass, contraction, torsion, cls, auto_complex, two_term_to_auto,
                      is_elementary, elementary_product_witness, rotation_matrix)
from .relative import (FunctorSpec, Identity, Power, BaseChange, ZeroSource, ZeroTarget,
                       RelObjectB, RelObjectC, rel_b, rel_c, pair_map, parse_functor)
from .proofs import (WitnessBundle, k0_witness_construct, k0_witness_verify, part0_reduction,
                     part1_construct, part2_construct, part3_construct, part3_fabricate,
                     k0omegashift_witness, totbcf_check, composite_certificate)

__version__ = "0.1.0"
