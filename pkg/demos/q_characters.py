"""Characters of snake modules from non-overlapping lattice paths.

Run with ``python3 demos/q_characters.py``.
"""

from qaffine.loopalg import factor_into_roots
from qaffine.paths import enumerate_paths, q_character
from qaffine.snakes import Snake, neighbouring_snakes

# The fundamental module with highest loop-weight Y[1,0] in type A_2 has three
# paths; each path contributes the monomial read off its corners.
for p in enumerate_paths(1, 0, 2):
    up = sorted(tuple(c) for c in p.upper_corners())
    low = sorted(tuple(c) for c in p.lower_corners())
    print(f"path {p}: upper {up}, lower {low} -> {p.monomial()}")
print("character:", q_character([(1, 0)], 2))

# A longer prime snake in A_3.  Every coefficient is 1 and there is a single
# dominant monomial, namely the product of the snake's Y variables.
s = Snake([(1, 0), (2, 3), (3, 6)], 3)
ch = q_character(s)
print(f"\nsnake {s}: {len(ch)} monomials, coefficients {set(ch.coefficients())}")
print("dominant:", [str(m) for m in ch.dominant_monomials()])

# Every other monomial is the top one times inverse affine roots.
top = s.highest_monomial()
sample = sorted(ch.monomials(), key=str)[:3]
for m in sample:
    exps = factor_into_roots(m, top)
    roots = " ".join(f"A[{i},{k}]^{e}" for (i, k), e in sorted(exps.items())) or "(top)"
    print(f"{m} = top * {roots}")

xs, ys = neighbouring_snakes(s)
print(f"\nneighbouring snakes of {s}: X = ({xs}), Y = ({ys})")
