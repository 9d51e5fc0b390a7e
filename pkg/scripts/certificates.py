"""Build and verify the cell certificates for the left cospan leg and the
point-join maps; report cell counts and which cells are not horns."""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from semisimp import sset as S
from semisimp.lifting import cospan_left_certificate, point_join_horn_certificate, verify_certificate


@dataclass
class Config:
    max_n: int = 3
    max_k: int = 3
    max_m: int = 2


def report(label, c, f):
    t0 = time.perf_counter()
    ok = verify_certificate(c, f)
    kinds = Counter(c.kinds())
    kinds_s = ", ".join(f"{k}={v}" for k, v in sorted(kinds.items()))
    print(f"{label:22s} cells={len(c.attachments):4d} verified={ok} horns_only={c.all_horns()} "
          f"[{kinds_s}] {time.perf_counter() - t0:.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    a = ap.parse_args()
    cfg = Config(max_n=a.max_n)
    for marked in (False, True):
        for n in range(cfg.max_n + 1):
            c, f = cospan_left_certificate(S.simplex(n), marked=marked)
            report(f"left leg D{n}{' marked' if marked else ''}", c, f)
    for k in range(cfg.max_k + 1):
        for m in range(cfg.max_m + 1):
            report(f"point join k={k} m={m}", *point_join_horn_certificate(k, m))


if __name__ == "__main__":
    main()
