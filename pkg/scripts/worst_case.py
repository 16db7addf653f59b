"""Diamond-packed worst-case boards: layout, audit and exact move counts."""
import argparse

from floodit.bounds import path_cost_lower_bound, worst_case_floor
from floodit.generators import packing_capacity, worst_case_layout
from floodit.solvers import NodeLimitExceeded, solve_exact_anchored


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(range(4, 13)))
    ap.add_argument("--colours", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    ap.add_argument("--max-nodes", type=int, default=200_000)
    args = ap.parse_args()
    print("n,c,r,clamped,diamonds,capacity,floor,path_cost,exact,audit")
    for n in args.sizes:
        for c in args.colours:
            try:
                layout = worst_case_layout(n, c)
            except ValueError as exc:
                print(f"{n},{c},,,,,,,,{exc}")
                continue
            b = layout.board()
            try:
                exact = solve_exact_anchored(b, max_nodes=args.max_nodes).moves
            except NodeLimitExceeded:
                exact = "budget"
            audit = "ok" if not layout.audit(b) else "; ".join(layout.audit(b))
            print(f"{n},{c},{layout.r},{int(layout.clamped)},{len(layout.diamonds)},"
                  f"{packing_capacity(n, layout.r):.2f},{worst_case_floor(n, c)},"
                  f"{path_cost_lower_bound(b).cost},{exact},{audit}")


if __name__ == "__main__":
    main()
