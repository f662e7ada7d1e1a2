"""
The C3 worked example, end to end
=================================

Two q-weight multiplicities in type C3, then the same polynomial read off
three box tensors.
"""

from qweight import kl_poly, enumerate_highest, energy, ssot_enumerate, ssot_to_tensor
from qweight.ssot import as_box_tensor, epsilon_C

# the multiplicity of the zero weight in V(1,1)
print("KL_(1,1),0    =", kl_poly("C", 3, (1, 1), ()))
print("KL_(2,2,1),(1,1,1) =", kl_poly("C", 3, (2, 2, 1), (1, 1, 1)))

# highest-weight box tensors of length 3 and weight e1, letters up to 3
for t in enumerate_highest(3, (1, 0, 0), 3):
    print(f"  {t}   energy {energy(t)}   max letter {t.max_index}")

# the same elements come out of the oscillating tableaux with shape (1)
for T in ssot_enumerate((1,), (1, 1, 1), 2):
    t = as_box_tensor(ssot_to_tensor(T))
    print("  chain", [str(p) for p in T.chain()], "->", t, " eps", epsilon_C(T))

# energies q^2, q^3, q^4; the two with max letter 1 give q^2 + q^4
