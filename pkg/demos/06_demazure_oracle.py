"""
Demazure operators as an independent oracle
===========================================

D_w0 applied to e^lam times the product over positive roots of
1/(1 - q e^alpha) expands as sum_nu KL_{nu,lam} chi^nu.  Everything is
truncated at q-degree 6.
"""

from qweight import character_expansion, demazure_kl_check, kl_character_sum, weyl_character
from qweight.roots import GL_A

chi = weyl_character("C", 2, (1, 0))
print("chi(1) of C2:", chi)

fc = demazure_kl_check("C", 3, (), qmax=6)
for nu, p in sorted(character_expansion(fc, "C", 3).items()):
    print("  ", nu, p)

rhs, table = kl_character_sum("C", 3, (), qmax=6)
print("agrees with the KL sum:", fc == rhs)

# glA vanishes on some roots, so a cap on the number of roots is needed
fc = demazure_kl_check("C", 2, (1,), GL_A, qmax=4, umax=4)
print("glA, root cap 4:", fc == kl_character_sum("C", 2, (1,), GL_A, qmax=4, umax=4)[0])
