"""
The Lyndon-word generating function
===================================

A product over Lyndon words of plethysms L_rho[h_w] predicts every
character ch(E_lam CF_n E_mu).  Here the prediction is compared with the
brute-force computation.
"""

from facedescent import coefficient, rhs_series, verify_main_theorem
from facedescent.genfunc import cartan_table
from facedescent.lyndon import duval_factorization, format_factorization, lyndon_type

# Every word factors uniquely into weakly decreasing Lyndon words.
w = (2, 4, 3, 1, 1, 2, 2, 2, 3, 1, 1, 2, 1)
print(format_factorization(duval_factorization(w)), lyndon_type(w))

series = rhs_series(4)
for lam in [(4,), (3, 1), (2, 2), (2, 1, 1)]:
    print(lam, coefficient(series, lam, (2, 1, 1)).schur_string())

report = verify_main_theorem(4)
print("all 25 pairs equal:", report["all_equal"])

# Pairing with s_n counts compositions by Lyndon type.
for row in cartan_table(4):
    if row["mu"] == [2, 1, 1] and row["series"]:
        print(row)
