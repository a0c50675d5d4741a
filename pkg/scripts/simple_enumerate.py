import argparse
from collections import Counter

from tqdm import tqdm

from wmod.semigroup import enumerate_semigroups
from wmod.unfolding import moduli_report


def main(args):
    for genus in range(args.genus_min, args.genus_max + 1):
        found = list(enumerate_semigroups(genus, complete_intersection=True))
        dims = Counter()
        for S in tqdm(found, desc=f"genus {genus}", leave=False):
            if S.is_hyperelliptic():
                dims["hyperelliptic"] += 1
                continue
            dims[moduli_report(S).dimension] += 1
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(dims.items(), key=lambda kv: str(kv[0])))
        print(f"genus {genus:>2}: {len(found):>3} complete intersections  (moduli dimension: count) {summary}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--genus_min", type=int, default=1)
    parser.add_argument("--genus_max", type=int, default=8)
    main(parser.parse_args())
