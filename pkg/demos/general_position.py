"""Dominant monomials in products of sl2 evaluation characters.

When the q-strings of two evaluation modules are not in special position, the
tensor product is irreducible.  Its character can still have more than one
dominant monomial: this happens exactly when one q-string strictly contains
the other and their upper ends differ.  This script lists those pairs.
"""

from qaffine import sl2eval


def segment(r, s):
    return sorted(range(s - r + 1, s + r, 2))


for k in range(1, 4):
    for l in range(1, 4):
        s1 = k % 2
        for delta in range(-(k + l + 2), k + l + 3):
            s2 = s1 + delta
            if (s2 + l) % 2 or sl2eval.special_position(k, l, s1, s2) is not None:
                continue
            n = sl2eval.general_position_dominant_count(k, l, s1, s2)
            if n > 1:
                print(f"V^({k})(q^{s1}) {segment(k, s1)}  (x)  V^({l})(q^{s2}) {segment(l, s2)}: "
                      f"{n} dominant monomials")
