import argparse

from wmod.canonicalmodel import (all_syzygies, canonical_curve, canonical_quadrics, excluded_targets,
                                 verify_shrunk_syzygy)
from wmod.semigroup import parse_semigroup


def main(args):
    S = parse_semigroup(args.semigroup)
    curve = canonical_curve(S)
    R = curve.ring
    quads = canonical_quadrics(S)
    print(f"{S!r}: genus {S.genus}, {len(quads)} quadrics")
    for q in quads:
        assert curve.vanishes(q.polynomial(R, curve.weights))
        print(f"  {q.name} = {q.render()}")

    excluded = set(excluded_targets(S))
    print("excluded:", ", ".join(q.name for q in quads if q.label in excluded))
    for cert in all_syzygies(S):
        print(f"\n{cert.render()} = 0")
        trace = verify_shrunk_syzygy(S, cert)
        for line in trace.lines:
            print(f"    {line}")
        print(f"    {'trivial' if trace.trivial else 'Koszul'} after shrinking")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--semigroup", type=str, default="4,7,10")
    main(parser.parse_args())
