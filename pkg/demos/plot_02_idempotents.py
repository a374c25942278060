"""
An equivariant family of orthogonal idempotents
===============================================

One idempotent per set partition, built from uniform averages of faces and
checked against every defining property before it is returned.
"""

from facedescent import build_family, verify_family
from facedescent.combinatorics import SetPartition

fam = build_family(3)

# The two-block idempotent for {12, 3}: its coefficients sum to 1 on faces
# with that exact support and it also uses finer faces.
X = SetPartition.from_blocks([[1, 2], [3]])
for face, c in sorted(fam[X].terms.items(), key=lambda kv: (len(kv[0]), str(kv[0]))):
    print(f"{str(face):>10}  {c}")

# Summing over a symmetric group orbit gives one idempotent per partition of n.
for lam, E in fam.by_orbit.items():
    print(lam, len(E.terms), "terms")

# verify_family reports how many individual checks ran.
print(verify_family(build_family(4, verify=False)))
