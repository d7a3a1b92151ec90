"""
Checking finite models
======================

Finite models are pairs of operation tables.  The checker reports every
violated axiom together with a witness tuple.
"""

# %%
from qcalc.finite import (
    canonical_model,
    check_fieldoid_axioms,
    check_paf_axioms,
    check_paf_lemmas,
    decompose_fieldoid,
    disjoint_union,
    partial_field_model,
)

gf3 = canonical_model(3, [2])
print(gf3.labels)
print(check_paf_axioms(gf3).passed)

# %%
# The three-element partial field {-1, 0, 1} with 1 + 1 undefined breaks
# associativity of addition, and summability stops being transitive.
pf = partial_field_model()
for line in check_paf_axioms(pf).format(limit=2):
    print(line)
print(check_paf_lemmas(pf).witnesses("summability-transitive"))

# %%
# A disjoint union is a fieldoid; it splits back into its pieces.
union = disjoint_union([canonical_model(2), canonical_model(5), gf3])
print(check_fieldoid_axioms(union).passed)
for part in decompose_fieldoid(union):
    print(part.n, check_paf_axioms(part).passed)
