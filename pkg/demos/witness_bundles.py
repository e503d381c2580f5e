"""Self-checking witnesses for relations between classes of relative objects.

Each constructor returns a bundle: the objects it built, the exact sequences
it claims, and named checks.  A bundle passes when every check does.

Run with ``python3 demos/witness_bundles.py``.
"""
from binarytor import complexes as cx
from binarytor.fabricate import random_rel_object
from binarytor.proofs import (UnequalClass, k0_witness_construct, k0omegashift_witness,
                              part0_reduction, part1_construct, part2_construct, part3_construct,
                              part3_fabricate, totbcf_check, totbcf_fabricate)
from binarytor.relative import BaseChange, Identity, Power
from binarytor.rings import GF, QQ, ZZ
from binarytor.suites import break_comparison

F3 = GF(3)


def show(title, bundle):
    print(f"{title}: {'passes' if bundle.passes else 'FAILS'} "
          f"({len(bundle.all_checks())} checks)")
    for name in bundle.failed():
        print("   failed:", name)


# Free modules of equal rank have equal classes; the witness is two short exact sequences.
show("k0 witness, ranks 3 and 3", k0_witness_construct(QQ, 3, 3, seed=1))
try:
    k0_witness_construct(QQ, 2, 3)
except UnequalClass as e:
    print("k0 witness, ranks 2 and 3: refused,", e)

# A random object ((M1, M2), N, (u1, u2)) over base change from ZZ to QQ.
x = random_rel_object(BaseChange(ZZ, QQ), 7, equal_grading=True)
print("\nobject:", x)
show("shift witness 0 -> x -> Cone(1_x) -> x[-1] -> 0", k0omegashift_witness(x))
show("part2 (equal gradings)", part2_construct(x))

show("\npart0 over Identity(ZZ)", part0_reduction(random_rel_object(Identity(ZZ), 3)))
show("part1 over Power(2,QQ), m = 2", part1_construct(Power(2, QQ), 2, 2, seed=5))
show("totbcf over Identity(F3)", totbcf_check(*totbcf_fabricate(Identity(F3), 2)))

inp = part3_fabricate(Identity(F3), 4)
show("\npart3 over Identity(F3)", part3_construct(inp))

# Mutations: each breaks exactly one claim.
show("part3 with the sign of q' dropped", part3_construct(inp, drop_minus=True))
seed = 1
while cx.is_acyclic((y := random_rel_object(Identity(QQ), seed)).src[0]):
    seed += 1
show("shift witness with a zero comparison map", k0omegashift_witness(break_comparison(y)))
