"""
When does a coherent unit system exist?
=======================================

A coherent system is a choice of one nonzero element per dimension that
is closed under multiplication.  In the canonical model GF(3) x Z/2 the
choice is easy; in the model built on Z/4 it cannot be made at all.
"""

# %%
from qcalc.finite import (
    canonical_model,
    check_no_dimensionful_roots,
    check_root_indistinguishability,
    cyclic_extension,
    cyclic_extension_model,
    search_coherent_systems,
    z4_extension_model,
)

for model in [canonical_model(3, [2]), z4_extension_model()]:
    s = search_coherent_systems(model)
    print(model.name, s.labels, f"{s.candidates_examined}/{s.total_candidates} candidates")

# %%
# In the Z/4 model the dimensionful class is {j, j3} and j * j = j2 = -1,
# so neither choice squares to 1.  Addition on that class does not depend
# on which of the two is used to transport the field's addition.
ext = cyclic_extension(3, 2)
j, j3 = ext.labels.index("j"), ext.labels.index("j3")
print(all(ext.fiber_sum(a, b, j) == ext.fiber_sum(a, b, j3) for a in (None, j, j3) for b in (None, j, j3)))

# %%
# Cyclic extensions GF(p)* -> Z/((p-1)m) -> Z/m split iff gcd(p-1, m) = 1.
for p, m in [(3, 3), (5, 3), (3, 2), (5, 2), (7, 2)]:
    model = cyclic_extension_model(p, m)
    found = search_coherent_systems(model).found
    roots = check_no_dimensionful_roots(model).passed
    twins = check_root_indistinguishability(model).passed
    print(f"p={p} m={m}: coherent={found} roots-condition={roots} twins-condition={twins}")
