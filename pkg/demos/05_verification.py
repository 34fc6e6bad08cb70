"""Run the verification harness from Python.

The named check suite reproduces every headline value exactly (averages,
degree counts, kernel containments, extension and correspondence facts);
the scans sweep the whole catalogue for counterexamples to the threshold
implications and report the groups sitting exactly on a threshold.

The same functionality is exposed on the command line:

    chardeg verify paper
    chardeg scan --check thmA
    chardeg scan --check question:7 --json
"""

from chardeg import Catalogue, paper_check_suite, theorem_scan

cat = Catalogue()

report = paper_check_suite(cat)
print(f"named checks: {report.passed}/{len(report.checks)} pass")
for check in report.checks[:8]:
    print(f"  [{'pass' if check.outcome else 'FAIL'}] "
          f"{check.anchor}  [{check.witness}]")
print("  ...")

for mode in ("thmA", "thmB", "conj3p"):
    scan = theorem_scan(cat, mode)
    verdict = "no violations" if scan.all_passed() else "VIOLATIONS"
    print(f"\nscan {mode}: {verdict} across {len(scan.checks)} groups; "
          f"boundary cases: {sorted(scan.boundary)}")

for p in (2, 3, 5, 7, 11, 13):
    scan = theorem_scan(cat, "question", p=p)
    print(f"scan question p={p}: "
          f"{'no violations' if scan.all_passed() else 'VIOLATIONS'}")

scan = theorem_scan(cat, "cs")
print(f"\nCauchy-Schwarz bound acd(G) <= |G|/(degree sum): "
      f"{'holds everywhere' if scan.all_passed() else 'violated'}")
