"""
Type A: energy is charge
========================
"""

from qweight import charge, energy, enumerate_highest, kl_poly, kostka_foulkes
from qweight.roots import partitions_of
from qweight.tableaux import reading_word, tensor_to_tableau

for lam in partitions_of(4):
    print(f"K_{lam},(1^4) = {kostka_foulkes(lam, (1, 1, 1, 1))}   KL = {kl_poly('A', 4, lam, (1, 1, 1, 1))}")

n = 4
for shape in partitions_of(n):
    for t in enumerate_highest(n, shape.padded(n), n, positive_only=True):
        T = tensor_to_tableau(t)
        print(f"  {t}   energy {energy(t)}   charge {charge(reading_word(T))}   tableau {T}")
