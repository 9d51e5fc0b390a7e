"""Run the acceptance criteria outside pytest and print one line each.
Exit status is the number of failing criteria."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import test_acceptance as acc  # noqa: E402


def main():
    failed = 0
    for num, fn, bound in acc.CRITERIA:
        ok, _, _ = acc.run_criterion(num, fn, bound)
        failed += not ok
        print(acc.format_line(num), flush=True)
    return failed


if __name__ == "__main__":
    sys.exit(main())
