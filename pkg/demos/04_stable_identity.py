"""
Stable multiplicities: glA versus standard lengths
==================================================

q^{(|lam|-|mu|)/2} times the glA stable polynomial equals the standard
one in types C and D.  Type B has short roots e_i whose coordinate sum is
1, so the rescaling argument breaks; the demo shows it failing.
"""

from qweight import harness as H

for t in "BCD":
    reports, summary = H.run_sweep(H.grid("stable-identity", n_max=3, size_max=4, types=(t,)))
    passed = summary.counts.get(("stable-identity", "PASS"), 0)
    print(f"type {t}: {passed}/{summary.total} pass")

# smallest type B counterexample
r = H.verify_stable_identity("B", 2, (1, 1), ())
print(r.status.value, "lhs", r.lhs, "rhs", r.rhs)
