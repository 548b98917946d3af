"""Numerically check the sign law of quadratic Gauss sums over F_p and its extensions."""
import argparse

from unipotent_atlas.quartic import gauss_sum_numeric, is_prime


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=60)
    ap.add_argument("--s-max", type=int, default=2)
    args = ap.parse_args()
    print("p\ts\tverdict\tmatches_law")
    for p in range(3, args.p_max + 1):
        if not is_prime(p):
            continue
        for s in range(1, args.s_max + 1):
            if p**s > 10**4:
                break
            rep = gauss_sum_numeric(p, s)
            print(f"{p}\t{s}\t{rep.verdict}\t{rep.matches_law}")


if __name__ == "__main__":
    main()
