"""Print the root of unity and surviving candidates for each cuspidal query on a grid."""
import argparse

from unipotent_atlas.zeta import ZetaQuery, divisibility_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", default="3,5,7,11,13")
    ap.add_argument("--a-max", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=4)
    args = ap.parse_args()
    primes = [int(p) for p in args.primes.split(",")]
    queries = [("Sp", k * (k + 1) // 2) for k in range(1, args.k_max + 1)]
    queries += [("SO", (2 * k) ** 2 // 2) for k in range(1, args.k_max // 2 + 1)]
    print("family\tn\tp\ta\tzeta\tsurvivors\tpass")
    for family, n in queries:
        for p in primes:
            for a in range(1, args.a_max + 1):
                rep = divisibility_report(ZetaQuery(family, n, p, a))
                survivors = ",".join(str(r) for r in rep.survivors)
                print(f"{family}\t{n}\t{p}\t{a}\t{rep.zeta}\t{survivors}\t{rep.passed}")


if __name__ == "__main__":
    main()
