"""Build and verify every reduction certificate for small SCS instances."""
import argparse
import itertools

from floodit.generators import (gen_reduction_3colour, gen_reduction_4colour, gen_reduction_height3,
                                verify_certificate)
from floodit.scs import SCSInstance, solve_scs_exact


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=2)
    ap.add_argument("--max-w", type=int, default=2)
    args = ap.parse_args()
    words = [w for length in range(1, args.max_w + 1) for w in itertools.product((1, 2), repeat=length)]
    print("reduction,strings,target,scs,expected,board,status")
    for k in range(1, args.max_k + 1):
        for ws in itertools.product(words, repeat=k):
            inst = SCSInstance(ws, 2)
            length = solve_scs_exact(inst)[0]
            label = " ".join("".join(map(str, w)) for w in ws)
            certs = [("four-colour", None, gen_reduction_4colour(inst))]
            certs += [("three-colour", ell, gen_reduction_3colour(inst, ell))
                      for ell in (length - 1, length) if ell >= 1]
            if all(len(w) == 2 and w[0] != w[1] for w in ws):
                certs.append(("height-3", None, gen_reduction_height3(inst)))
            for name, ell, cert in certs:
                rep = verify_certificate(cert)
                print(f"{name},{label},{'' if ell is None else ell},{length},{rep.expected_moves},"
                      f"{cert.board.h}x{cert.board.n},{rep.status}")


if __name__ == "__main__":
    main()
