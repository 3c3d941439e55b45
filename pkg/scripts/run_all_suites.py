#!/usr/bin/env python3
"""Run every verification suite at acceptance scale and print a summary.

Exit code 0 only if every suite passes. Mirrors what the acceptance tests
assert, as a single human-runnable entry point.
"""

import sys
import time

from shfc.suites import (
    verify_beilinson,
    verify_bott,
    verify_key_theorem,
    verify_oracle,
    verify_regularity_tensor,
    verify_subadditivity,
)


def main():
    runs = []
    for n in (1, 2, 3):
        runs.append((f"oracle dim={n}", lambda n=n: verify_oracle(dim=n, count=200)))
    runs.append(("subadditivity dim=2 x100", lambda: verify_subadditivity(dim=2, count=100)))
    runs.append(
        ("regularity-tensor dim=2 x100", lambda: verify_regularity_tensor(dim=2, count=100))
    )
    for p in (2, 3, 5):
        for n in (1, 2):
            runs.append(
                (f"key-theorem p={p} dim={n}", lambda p=p, n=n: verify_key_theorem(char=p, dim=n))
            )
    for n in (1, 2, 3):
        runs.append((f"bott dim={n}", lambda n=n: verify_bott(dim=n)))
    runs.append(("beilinson dim=2 x30", lambda: verify_beilinson(dim=2, count=30)))

    failures = 0
    for name, run in runs:
        start = time.time()
        report = run()
        status = "pass" if report.all_pass else "FAIL"
        if not report.all_pass:
            failures += 1
        print(f"{status}  {name}  ({len(report.instances)} instances, {time.time() - start:.1f}s)")
        if not report.all_pass:
            for inst in report.instances:
                if not inst["pass"]:
                    print(f"      {inst['inputs']}  {inst['relation']}  {inst['observed']}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
