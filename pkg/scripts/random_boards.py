"""Upper-bound strategies and the path-cost lower bound on random boards."""
import argparse
import statistics

from floodit.bounds import path_cost_lower_bound, rows_bound, sections_bound
from floodit.generators import gen_random
from floodit.solvers import approx_cyclic, flood_by_sections, flood_row_by_row, greedy_max_gain


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 50])
    ap.add_argument("--colours", type=int, nargs="+", default=[2, 4, 8, 16])
    ap.add_argument("--seeds", type=int, default=50)
    args = ap.parse_args()
    print("n,c,path_cost_mean,greedy_mean,cyclic_mean,rows_mean,rows_max,rows_bound,"
          "sections_mean,sections_max,sections_bound")
    for n in args.sizes:
        for c in args.colours:
            stats = {"pc": [], "greedy": [], "cyclic": [], "rows": [], "sections": []}
            for seed in range(args.seeds):
                b = gen_random(n, c, seed)
                stats["pc"].append(path_cost_lower_bound(b).cost)
                stats["greedy"].append(len(greedy_max_gain(b)))
                stats["cyclic"].append(len(approx_cyclic(b)))
                stats["rows"].append(len(flood_row_by_row(b)))
                stats["sections"].append(len(flood_by_sections(b)))
            mean = {k: statistics.fmean(v) for k, v in stats.items()}
            print(f"{n},{c},{mean['pc']:.2f},{mean['greedy']:.2f},{mean['cyclic']:.2f},"
                  f"{mean['rows']:.2f},{max(stats['rows'])},{rows_bound(n, c)},"
                  f"{mean['sections']:.2f},{max(stats['sections'])},{sections_bound(n, c):.1f}")


if __name__ == "__main__":
    main()
