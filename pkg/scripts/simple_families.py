import argparse

from tqdm import tqdm

from wmod.cotangent import t1_report
from wmod.semigroup import codim_two_family, dyadic_family
from wmod.unfolding import moduli_report


def main(args):
    rows = []
    for tau in tqdm(range(1, args.tau_max + 1)):
        S = codim_two_family(tau) if args.kind == "codim2" else dyadic_family(args.k, tau)
        t1 = t1_report(S)
        report = moduli_report(S)
        rows.append((tau, S, t1, report))

    print(f"{'tau':>3} {'g':>5} {'F':>6} {'T1-':>5} {'T1+':>4} {'tjurina':>8} {'dim':>4}  semigroup")
    for tau, S, t1, report in rows:
        # for a complete intersection the Tjurina number is twice the genus
        assert t1.tjurina == 2 * S.genus
        print(f"{tau:>3} {S.genus:>5} {S.frobenius:>6} {t1.negative_dim:>5} {t1.nonnegative_dim:>4} "
              f"{t1.tjurina:>8} {report.dimension:>4}  {S!r}")
    if args.show_weights:
        for tau, S, _, report in rows:
            print(f"{S!r}: {report.render()}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--kind", type=str, default="codim2", choices=["codim2", "dyadic"])
    parser.add_argument("--k", type=int, default=4, help="dyadic family exponent, 4 gives <16,17,18,20,24> at tau=1")
    parser.add_argument("--tau_max", type=int, default=3)
    parser.add_argument("--show_weights", action="store_true")
    main(parser.parse_args())
