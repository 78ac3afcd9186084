"""
Running the identity suite
==========================

The same thing as ``degenstir verify`` but from Python.
"""
from degenstir.identities import Bounds, emit_report, run_suite

quick = Bounds(n_max=5, r_max=4, alphas=(1, 2), sample_points=5, order=10)
report = run_suite(quick)
print(emit_report(report, "markdown"))
print("all passed:", report.ok)

# nothing set, nothing run
print({c.status for c in run_suite(Bounds()).cases})
