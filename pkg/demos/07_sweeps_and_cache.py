"""
Sweeps, reports and the KL cache
================================
"""

import os
import tempfile

from qweight import harness as H

tmp = tempfile.mkdtemp()
cache = os.path.join(tmp, "kl.jsonl")

specs = H.grid("conj2", n_max=3, size_max=4) + H.grid("monotonicity", n_max=3, size_max=4)
reports, summary = H.run_sweep(specs, jobs=2, cache=cache)
print(summary.to_json())

# second run is served entirely from disk
reports, summary = H.run_sweep(specs, jobs=1, cache=cache)
print("kl evaluations on rerun:", summary.kl_evaluations, "hits:", summary.cache_hits)

H.write_reports(reports, os.path.join(tmp, "report.json"))
print(open(os.path.join(tmp, "report.csv")).read().splitlines()[:3])
print("exit code would be", H.exit_code(reports))
