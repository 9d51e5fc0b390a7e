"""Exhaustively check the cellwise homotopy H up to a given dimension."""
import argparse
import time

from semisimp.freefunctor import verify_H


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, default=4)
    d = ap.parse_args().dim
    for n in range(d + 1):
        t0 = time.perf_counter()
        rep = verify_H(n)
        print(f"d={n}: inputs={rep.inputs} morphisms={rep.morphisms} composites={rep.composites} "
              f"failures={rep.failures} ({time.perf_counter() - t0:.2f}s)")
        if rep.failures:
            print("  first failure:", rep.first_failure)


if __name__ == "__main__":
    main()
