"""Tabulate twist orders |A^F|, |Z^F| and the reduced group for every flip pattern."""
import argparse
import time

from unipotent_atlas.spin import OddPartSet, all_patterns, classify_twist, twist_analysis


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--family", choices=["b", "d"], default=None)
    args = ap.parse_args()
    print("k\tparts\tflips\tcase\tfamily\tinner\tAF\tZF\tAtilde\tseconds")
    for k in range(1, args.k_max + 1):
        parts = OddPartSet(tuple(range(1, 2 * k, 2)))
        for t in all_patterns(k):
            start = time.perf_counter()
            r = twist_analysis(parts, t, family=args.family.upper() if args.family else None)
            took = time.perf_counter() - start
            flips = "".join(map(str, t.flips)) or "-"
            print(f"{k}\t{','.join(map(str, parts.parts))}\t{flips}\t{classify_twist(t)}\t"
                  f"{r.family}\t{r.inner}\t{r.AF}\t{r.ZF}\t{r.Atilde}\t{took:.3f}")


if __name__ == "__main__":
    main()
