"""Greedy versus optimal play on the adversarial three-colour family."""
import argparse

from floodit.generators import gen_greedy_adversarial
from floodit.solvers import approx_cyclic, greedy_max_gain, greedy_perimeter, solve_exact_anchored


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14, 16, 20, 30])
    args = ap.parse_args()
    print("n,exact,greedy_gain,greedy_perimeter,cyclic")
    for n in args.sizes:
        b = gen_greedy_adversarial(n)
        print(f"{n},{solve_exact_anchored(b).moves},{len(greedy_max_gain(b))},"
              f"{len(greedy_perimeter(b))},{len(approx_cyclic(b))}")


if __name__ == "__main__":
    main()
