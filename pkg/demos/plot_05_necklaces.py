"""
Necklaces and higher Lie characters
===================================

L_n counts primitive necklaces by content, and grouping the beads of a
necklace of partitions along its Lyndon word of bead lengths is a
bijection.
"""

from facedescent import Necklace, lie, monomial_coefficient, primitive_necklaces_with_content, psi, theta
from facedescent.combinatorics import Partition

for content in [(1, 1), (2, 1), (2, 2, 1, 1)]:
    k = sum(content)
    print(content, primitive_necklaces_with_content(content), monomial_coefficient(lie(k), content))

beads = ["244", "44", "23", "266", "44", "23", "246", "44", "23"]
eta = Necklace(Partition.from_parts(int(c) for c in b) for b in beads)
tau = psi(eta)
print(eta)
print(tau)
print(theta(tau) == eta)
