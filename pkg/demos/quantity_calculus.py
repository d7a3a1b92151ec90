"""
Quantities with partial addition
================================

Adding quantities of different dimensions gives ``Undefined`` rather
than raising, and the undefined result absorbs everything after it.
"""

# %%
from fractions import Fraction

from qcalc import Quantity, load_definitions
from qcalc.cli import shipped_file
from qcalc.evaluate import run
from qcalc.quantity import q_add, q_mul, zero_of
from qcalc.units import coherent_from_base_units, decompose

length = Quantity(3, "L")
time = Quantity(2, "T")
print(length + Quantity(4, "L"))
print(length + time)
print(q_mul(q_add(length, time), Quantity(0)))

# %%
# Each dimension has its own zero.
print(zero_of(length), zero_of(time), zero_of(length) == zero_of(time))

# %%
# A unit system picks one nonzero quantity per dimension.  Here the
# length unit is a centimetre, so 1 L has numerical value 100.
cm = coherent_from_base_units({"L": Quantity(Fraction(1, 100), "L"), "T": Quantity(1, "T")})
value, unit = decompose(Quantity(1, "L"), cm)
print(value, "x", unit)
speed = Quantity(3, "L*T^(-1)")
value, unit = decompose(speed, cm)
print(value, "x", unit)

# %%
# The calculator front end works over the shipped SI definitions.
si = load_definitions(shipped_file("si.qdef"))
for line in ["3 m + 4 m", "1 m + 1 s", "2 m + 200 cm", "3 km / (2 min)", "(4 m^2)^(1/2)", "1 / (0 m)"]:
    print(f"{line:>16}  ->  {run(line, si).text}")
