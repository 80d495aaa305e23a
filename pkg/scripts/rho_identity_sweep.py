"""Verify the composition identity for the rho maps over a degree range.

The identity

    (rho_{p,q} (x) Id_r) o rho_{p+q,r}
        = (Id_p (x) rho_{q,r} + (-1)^{rq} Id_p (x) (tau_{r,q} o rho_{r,q}))
          o rho_{p,q+r}

is decided exactly in the group algebra of S_{p+q+r}, so degrees well
beyond what dense tensor matrices could reach are feasible.  The
--negative-control flag flips the sign and reports the expected failures.

Usage:
    python scripts/rho_identity_sweep.py [--max-total 9] [--negative-control]
"""

import argparse
import sys
import time

from leibcohom.shuffles import check_rho_identity


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-total", type=int, default=9,
                        help="largest p+q+r to test")
    parser.add_argument("--negative-control", action="store_true",
                        help="flip the sign and expect failures")
    args = parser.parse_args()
    bad = 0
    total = 0
    for p in range(1, args.max_total - 1):
        for q in range(1, args.max_total - p):
            for r in range(1, args.max_total - p - q + 1):
                total += 1
                start = time.monotonic()
                v = check_rho_identity(p, q, r,
                                       flip_sign=args.negative_control)
                elapsed = time.monotonic() - start
                status = "ok" if v.ok else "FAIL"
                print(f"(p,q,r)=({p},{q},{r})  {status}  ({elapsed:.3f}s)")
                if not v.ok:
                    bad += 1
    print(f"{total} triples, {bad} failures")
    if args.negative_control:
        return 0 if bad else 2
    return 2 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
