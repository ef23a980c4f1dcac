"""
Checking the structural statements by fuzzing
=============================================
"""

from mtclab import CATALOG, FuzzConfig, check, check_all, fixture, fuzz
from mtclab.report import emit_report

for key in list(CATALOG)[:5]:
    print(key, "-", CATALOG[key].description)

# one statement, one instance
print(emit_report(check("T-S4", fixture("STAR5"))))

# all statements on one instance
for r in check_all(fixture("SINK4")):
    print(f"{r.id:10} {r.verdict.value}")

# a seeded sweep; same config gives the same report for any number of jobs
report = fuzz(FuzzConfig(((2, 2, 1), (2, 2, 2)), seeds=range(0, 50)), jobs=2)
print("instances:", report.instances, "failures:", report.fail_count)
print(report.to_json()[:400])
