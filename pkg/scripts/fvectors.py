"""Print f-vectors of the standard constructions on small simplices."""
import argparse
from dataclasses import dataclass

from semisimp import sset as S
from semisimp.freefunctor import ul_truncated
from semisimp.monoidal import join, tensor
from semisimp.subdiv import cospan, sd


@dataclass
class Config:
    max_n: int = 3
    ul_dim: int = 4


def rows(cfg: Config):
    for n in range(cfg.max_n + 1):
        D = S.simplex(n)
        yield f"Sd D{n}", S.f_vector(sd(D).complex)
        yield f"cospan summit D{n}", S.f_vector(cospan(D).summit)
        yield f"UL D{n} (d={cfg.ul_dim})", S.f_vector(ul_truncated(D, cfg.ul_dim))
    for a in range(cfg.max_n + 1):
        for b in range(a, cfg.max_n + 1):
            yield f"D{a} (x) D{b}", S.f_vector(tensor(S.simplex(a), S.simplex(b)))
            yield f"D{a} * D{b}", S.f_vector(join(S.simplex(a), S.simplex(b)).result)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--ul-dim", type=int, default=Config.ul_dim)
    a = ap.parse_args()
    for name, fv in rows(Config(a.max_n, a.ul_dim)):
        print(f"{name:24s} {' '.join(map(str, fv))}")


if __name__ == "__main__":
    main()
