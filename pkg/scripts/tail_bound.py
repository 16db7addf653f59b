"""Union-bound tail probability for cheap corner-to-corner paths, by board size."""
import argparse

from floodit.bounds import random_board_tail_bound, random_board_tail_remainder


def threshold(n, c):
    return (n - 1) / 22 if c == 3 else 2 * (3 / 10 - 1 / c) * (n - 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[30, 100, 300, 1000, 3000, 10000])
    ap.add_argument("--colours", type=int, nargs="+", default=[3, 4, 5, 6])
    args = ap.parse_args()
    print("n,c,k,tail,remainder")
    for c in args.colours:
        for n in args.sizes:
            k = threshold(n, c)
            print(f"{n},{c},{k:.4f},{random_board_tail_bound(n, c, k):.4e},"
                  f"{random_board_tail_remainder(n, c, k):.4e}")


if __name__ == "__main__":
    main()
