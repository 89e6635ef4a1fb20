"""
A bound report
==============

Every bound is evaluated with its hypotheses checked; bounds that do not
apply are listed with the reason.
"""

import json

from cyclic_coloring import bound_report
from cyclic_coloring.generators import prism_subdiv

report = bound_report(prism_subdiv(1), "prism_subdiv_1")
for entry in report.entries:
    shown = entry.value if entry.applicable else "n/a"
    print(f"{entry.name:22s} {shown!s:>4}  {entry.note}")
print("violations:", report.violations or "none")
print(json.dumps(report.to_json()["conjectures"], indent=2))
