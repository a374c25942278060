"""
Composition multiplicities for n = 4
====================================

Row nu, column mu lists the simple modules M_lam of the descent algebra in
the nu-isotypic part of CF_4 E_mu, with multiplicities.  Everything is
computed by brute force linear algebra on the 75-dimensional face algebra.
"""

from facedescent import character_of, ch_of_right_module, isotypic_dimension, projected_space
from facedescent.repanalysis import multiplicity_table

table = multiplicity_table(4)
for (nu, mu), cell in sorted(table.items()):
    if cell:
        print(f"nu={nu!s:5} mu={mu!s:5}", {str(k): v for k, v in cell.items()})

# The cell (31, 211) holds M_4 with multiplicity 6: f^31 = 3 times a
# two-dimensional trivial isotypic part of E_4 CF_4 E_211.
ch = character_of(projected_space(4, (4,), (2, 1, 1)))
print(ch.schur_string())

# Dimensions follow from Kostka numbers alone.
print(isotypic_dimension(4, (3, 1), (2, 1, 1)))
print(ch_of_right_module(4, (2, 1, 1)).schur_string())
