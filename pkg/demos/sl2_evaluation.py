"""Explicit matrices for the evaluation modules of quantum affine sl2."""

from qaffine import sl2eval
from qaffine.sl2eval import EvalModule

m = EvalModule(2, 0)
print(f"{m}: dimension {m.dim}")
for tag, p in (("X+", 1), ("X-", 1), ("K", 0)):
    mat = sl2eval.generator_matrix(m, tag, p)
    print(f"  {tag if tag == 'K' else tag + '_' + str(p)}:")
    for row in mat.entries:
        print("    [" + ", ".join(str(e) for e in row) + "]")

# The Phi generators come out diagonal, and their eigenvalue series on each
# basis vector is a ratio of the polynomials recorded by the loop-weight.
for k in range(m.dim):
    print(f"  v_{k}: loop-weight {sl2eval.loop_weight(m, k)}, "
          f"series check {sl2eval.drinfeld_series_check(m, k, 8)}")
print("  character:", sl2eval.q_character_closed(m))

failed = [label for label, ok in sl2eval.check_drinfeld_relations(m, 2) if not ok]
print("  relation failures:", failed or "none")

# Two modules whose q-strings are in special position: the product of the
# characters splits as submodule plus quotient.
d = sl2eval.special_position(2, 1, 0, 3)
print(f"\n{d.left} (x) {d.right}: case {d.case}, p = {d.p}")
print(f"  sub {d.sub[0]} (x) {d.sub[1]}, quotient {d.quotient[0]} (x) {d.quotient[1]}")
print("  character identity holds:", sl2eval.tensor_identity_check(d))
