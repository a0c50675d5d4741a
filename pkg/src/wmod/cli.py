import argparse
import json
import logging
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from tqdm import tqdm

from .canonicalmodel import all_syzygies, canonical_quadrics, check_guards, excluded_targets, verify_shrunk_syzygy
from .config import load_settings
from .cotangent import jacobian_on_curve, t1_report
from .errors import (DegenerateNormalization, EmptyInput, GuardViolation, Hyperelliptic, NotCompleteIntersection,
                     NotSymmetric, WmodError, WmodWarning)
from .monomialbasis import quadric_excess
from .presentation import char_is_admissible, minimal_presentation
from .semigroup import (NumericalSemigroup, codim_two_family, dyadic_family, enumerate_semigroups, parse_semigroup,
                        read_batch)
from .unfolding import moduli_report, normalize, unfold
from .utils.fields import check_characteristic

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class AnalysisReport:
    semigroup: dict
    presentation: dict
    t1: Optional[dict] = None
    moduli: Optional[dict] = None
    canonical: Optional[dict] = None
    warnings: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"schema_version": SCHEMA_VERSION, "command": "analyze"}
        out.update({k: v for k, v in asdict(self).items() if v is not None})
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AnalysisReport":
        return cls(
            semigroup=data["semigroup"],
            presentation=data["presentation"],
            t1=data.get("t1"),
            moduli=data.get("moduli"),
            canonical=data.get("canonical"),
            warnings=list(data.get("warnings", [])),
        )

    def render(self) -> str:
        sg = self.semigroup
        lines = [
            f"semigroup <{','.join(map(str, sg['generators']))}>",
            f"  genus {sg['genus']}, frobenius {sg['frobenius']}, conductor {sg['conductor']}",
            f"  gaps {' '.join(map(str, sg['gaps'])) or '-'}",
            f"  symmetric {_yes(sg['symmetric'])}, hyperelliptic {_yes(sg['hyperelliptic'])}, "
            f"ordinary {_yes(sg['ordinary'])}, weight {sg['weierstrass_weight']}",
        ]
        bw = sg["buchweitz"]
        verdict = f"obstructed at n={bw['first_obstruction']}" if bw["obstructed"] else "unobstructed"
        lines.append(f"  buchweitz {verdict} (n <= {bw['n_max']})")
        pres = self.presentation
        kind = "complete intersection" if pres["complete_intersection"] else "not a complete intersection"
        lines.append(f"presentation ({kind})")
        for j, (text, b) in enumerate(zip(pres["rendered"], pres["binomials"])):
            lines.append(f"  G{j + 1} = {text}    [{b['weight']}]")
        if self.t1 is not None:
            t1 = self.t1
            lines.append(f"T1 (characteristic {t1['characteristic']})")
            lines.append(f"  negative {t1['negative_dim']}, nonnegative {t1['nonnegative_dim']}, "
                         f"tjurina {t1['tjurina']}")
            lines.append("  degrees " + " ".join(f"{d}:{n}" for d, n in t1["by_degree"]))
        if self.moduli is not None:
            md = self.moduli
            lines.append("moduli")
            lines.append(f"  {md['projective_space']}  dimension {md['dimension']}")
            lines.extend(f"  {eq}" for eq in md["equations"])
        if self.canonical is not None:
            lines.extend(render_canonical(self.canonical))
        if self.warnings:
            lines.append("warnings")
            lines.extend(f"  {w}" for w in self.warnings)
        return "\n".join(lines)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_canonical(cm: dict) -> List[str]:
    lines = [f"canonical model ({len(cm['quadrics'])} quadrics)"]
    lines.extend(f"  {q['name']} = {q['rendered']}" for q in cm["quadrics"])
    lines.append("  excluded " + " ".join(cm["excluded"]))
    for cert in cm["syzygies"]:
        lines.append(f"  {cert['rendered']} = 0")
        if cert.get("shrunk") is not None:
            lines.extend(f"    {line}" for line in cert["shrunk"]["lines"])
    return lines


def semigroup_block(S: NumericalSemigroup, n_max: Optional[int] = None) -> dict:
    verdict = S.buchweitz_screen(n_max)
    return {
        "generators": list(S.minimal_generators),
        "genus": S.genus,
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "gaps": list(S.gaps),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "symmetric": S.is_symmetric(),
        "hyperelliptic": S.is_hyperelliptic(),
        "ordinary": S.is_ordinary(),
        "weierstrass_weight": S.weierstrass_weight(),
        "buchweitz": {
            "n_max": verdict.rows[-1].n,
            "obstructed": verdict.obstructed,
            "first_obstruction": verdict.first_obstruction,
            "rows": [list(row) for row in verdict.rows],
        },
    }


def moduli_obstruction(S: NumericalSemigroup, characteristic: int) -> Optional[WmodError]:
    """Why the moduli block is omitted, or ``None`` when it is computed."""
    if not S.is_symmetric():
        return NotSymmetric(f"{S!r} is not symmetric")
    if S.is_hyperelliptic():
        return Hyperelliptic(f"{S!r} is hyperelliptic")
    P = minimal_presentation(S)
    if not P.is_complete_intersection:
        return NotCompleteIntersection(f"{S!r} is not a complete intersection")
    if not char_is_admissible(P, characteristic):
        return DegenerateNormalization(f"characteristic {characteristic} is not admissible for {S!r}")
    return None


def canonical_block(S: NumericalSemigroup) -> dict:
    quads = canonical_quadrics(S)
    complete = minimal_presentation(S).is_complete_intersection
    certs = []
    for cert in all_syzygies(S):
        entry = cert.to_json()
        entry["shrunk"] = verify_shrunk_syzygy(S, cert).to_json() if complete else None
        certs.append(entry)
    names = {q.label: q.name for q in quads}
    return {
        "quadrics": [dict(q.to_json(), rendered=q.render()) for q in quads],
        "quadric_excess": quadric_excess(S),
        "excluded": [names[label] for label in excluded_targets(S)],
        "syzygies": certs,
    }


def build_report(S: NumericalSemigroup,
                 characteristic: int = 0,
                 canonical: bool = False,
                 require_moduli: bool = False,
                 require_canonical: bool = False) -> AnalysisReport:
    check_characteristic(characteristic)
    notes = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", WmodWarning)
        P = minimal_presentation(S)
        pres = dict(P.to_json(), admissible=char_is_admissible(P, characteristic))
        t1 = None
        if P.is_complete_intersection:
            t1 = t1_report(S, characteristic).to_json()
        else:
            notes.append(f"{S!r} is not a complete intersection; T1 is not computed")
        obstruction = moduli_obstruction(S, characteristic)
        moduli = None
        if obstruction is None:
            moduli = moduli_report(S, characteristic).to_json()
        elif require_moduli:
            raise obstruction
        elif isinstance(obstruction, DegenerateNormalization):
            notes.append(f"moduli omitted: {obstruction}")
        cblock = None
        if canonical:
            try:
                check_guards(S)
            except (NotSymmetric, GuardViolation) as err:
                if require_canonical:
                    raise
                notes.append(f"canonical model omitted: {err}")
            else:
                cblock = canonical_block(S)
    for w in caught:
        msg = str(w.message)
        if issubclass(w.category, WmodWarning) and msg not in notes:
            notes.append(msg)
    return AnalysisReport(semigroup_block(S), pres, t1, moduli, cblock, notes)


def _analyze_line(job):
    lineno, text, characteristic, canonical, require_moduli, require_canonical = job
    try:
        report = build_report(parse_semigroup(text), characteristic, canonical, require_moduli, require_canonical)
        return {"line": lineno, "input": text, "report": report.to_json()}
    except WmodError as err:
        return {"line": lineno, "input": text, "error": _error_json(err)}


def _error_json(err: WmodError) -> dict:
    return {"type": type(err).__name__, "message": str(err), "exit_code": err.exit_code}


def _parse_gens(tokens: List[str]) -> NumericalSemigroup:
    if not tokens:
        raise EmptyInput("no generators given")
    return parse_semigroup(" ".join(tokens))


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# ----- subcommands -----
def cmd_analyze(args):
    if args.batch:
        jobs = [(lineno, text, args.char, args.canonical, args.require_moduli, args.require_canonical)
                for lineno, text in read_batch(args.batch)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(tqdm(pool.map(_analyze_line, jobs), total=len(jobs), disable=not args.progress))
        else:
            results = [_analyze_line(job) for job in tqdm(jobs, disable=not args.progress)]
        code = max([r["error"]["exit_code"] for r in results if "error" in r], default=0)
        if args.json:
            return _dump({"schema_version": SCHEMA_VERSION, "command": "batch", "results": results}), code
        blocks = []
        for r in results:
            if "error" in r:
                blocks.append(f"# line {r['line']}: {r['input']}\nerror: {r['error']['message']}")
            else:
                blocks.append(f"# line {r['line']}: {r['input']}\n" + AnalysisReport.from_json(r["report"]).render())
        return "\n\n".join(blocks), code
    S = _parse_gens(args.generators)
    report = build_report(S, args.char, args.canonical, args.require_moduli, args.require_canonical)
    return (_dump(report.to_json()) if args.json else report.render()), 0


def cmd_enumerate(args):
    settings = load_settings()
    lines = []
    found = enumerate_semigroups(args.genus, args.symmetric, args.ci, settings=settings)
    for S in tqdm(found, disable=not args.progress, desc=f"genus {args.genus}"):
        dim = None
        if args.moduli and moduli_obstruction(S, 0) is None:
            dim = moduli_report(S).dimension
        if args.json:
            record = {"schema_version": SCHEMA_VERSION, "command": "enumerate", "generators": list(S.minimal_generators),
                      "genus": S.genus}
            if args.moduli:
                record["moduli_dimension"] = dim
            lines.append(json.dumps(record, sort_keys=True))
        elif args.moduli:
            lines.append(f"{S.text()}\t{'-' if dim is None else dim}")
        else:
            lines.append(S.text())
    return "\n".join(lines), 0


def cmd_syzygies(args):
    S = _parse_gens(args.generators)
    block = canonical_block(S)
    if args.json:
        return _dump(dict(block, schema_version=SCHEMA_VERSION, command="syzygies",
                          generators=list(S.minimal_generators))), 0
    return "\n".join(render_canonical(block)), 0


def cmd_buchweitz(args):
    S = _parse_gens(args.generators)
    block = semigroup_block(S, args.n_max)["buchweitz"]
    if args.json:
        return _dump({"schema_version": SCHEMA_VERSION, "command": "buchweitz", "generators": list(S.minimal_generators),
                      "buchweitz": block}), 0
    lines = [f"n={n}  sums={count}  bound={bound}  {'OBSTRUCTED' if bad else 'ok'}"
             for n, count, bound, bad in block["rows"]]
    lines.append("obstructed" if block["obstructed"] else "unobstructed")
    return "\n".join(lines), 0


def cmd_t1(args):
    S = _parse_gens(args.generators)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WmodWarning)
        report = t1_report(S, args.char)
    if args.json:
        J = jacobian_on_curve(minimal_presentation(S))
        return _dump({"schema_version": SCHEMA_VERSION, "command": "t1", "generators": list(S.minimal_generators),
                      "jacobian": [[list(e) for e in row] for row in J.entries], "t1": report.to_json()}), 0
    lines = [f"{d:>5}: {n}" for d, n in sorted(report.by_degree.items())]
    lines.append(f"negative {report.negative_dim}, nonnegative {report.nonnegative_dim}, tjurina {report.tjurina}")
    lines.extend(f"warning: {w}" for w in report.warnings)
    return "\n".join(lines), 0


def cmd_unfold(args):
    S = _parse_gens(args.generators)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WmodWarning)
        system = normalize(unfold(minimal_presentation(S)), args.char)
    weights = system.weights()
    if args.json:
        return _dump({"schema_version": SCHEMA_VERSION, "command": "unfold", "generators": list(S.minimal_generators),
                      "unfolding": system.to_json(), "weights": weights, "warnings": list(system.warnings)}), 0
    lines = system.equations()
    lines.append(f"free {len(weights)} of {len(system.coefficients)}: P({','.join(map(str, weights))})")
    lines.extend(f"warning: {w}" for w in system.warnings)
    return "\n".join(lines), 0


def cmd_family(args):
    rows = []
    for tau in args.tau:
        S = codim_two_family(tau) if args.kind == "codim2" else dyadic_family(args.k, tau)
        report = moduli_report(S)
        rows.append({
            "tau": tau,
            "generators": list(S.minimal_generators),
            "genus": S.genus,
            "frobenius": S.frobenius,
            "negative_t1": len(report.weights),
            "moduli_dimension": report.dimension,
        })
    if args.json:
        return _dump({"schema_version": SCHEMA_VERSION, "command": "family", "kind": args.kind, "rows": rows}), 0
    lines = ["tau  genus  frobenius  T1-  dim  generators"]
    for r in rows:
        lines.append(f"{r['tau']:>3}  {r['genus']:>5}  {r['frobenius']:>9}  {r['negative_t1']:>3}  "
                     f"{r['moduli_dimension']:>3}  <{','.join(map(str, r['generators']))}>")
    return "\n".join(lines), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wmod", description="Moduli of pointed Gorenstein monomial curves")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, characteristic=True):
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.add_argument("--out", type=str, default=None, help="write output to this file")
        if characteristic:
            p.add_argument("--char", type=int, default=0, help="characteristic of the ground field (0 or a prime)")

    p = sub.add_parser("analyze", help="full report for a semigroup")
    p.add_argument("generators", nargs="*", help="generators, e.g. 4,7,10")
    common(p)
    p.add_argument("--canonical", action="store_true", help="add canonical quadrics and syzygies")
    p.add_argument("--require-moduli", action="store_true", help="fail when no moduli block can be produced")
    p.add_argument("--require-canonical", action="store_true",
                   help="fail when --canonical cannot build the canonical model")
    p.add_argument("--batch", type=str, default=None, help="file with one semigroup per line")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="all semigroups of a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--ci", action="store_true", help="complete intersections only")
    p.add_argument("--moduli", action="store_true", help="append the moduli dimension")
    p.add_argument("--progress", action="store_true")
    common(p, characteristic=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("syzygies", help="canonical quadrics and syzygy certificates")
    p.add_argument("generators", nargs="*")
    common(p, characteristic=False)
    p.set_defaults(func=cmd_syzygies)

    p = sub.add_parser("buchweitz", help="Buchweitz realizability screen")
    p.add_argument("generators", nargs="*")
    p.add_argument("--n-max", type=int, default=None)
    common(p, characteristic=False)
    p.set_defaults(func=cmd_buchweitz)

    p = sub.add_parser("t1", help="graded T1 dimensions")
    p.add_argument("generators", nargs="*")
    common(p)
    p.set_defaults(func=cmd_t1)

    p = sub.add_parser("unfold", help="normalized negative-weight unfolding")
    p.add_argument("generators", nargs="*")
    common(p)
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("family", help="moduli dimensions along a family")
    p.add_argument("--kind", choices=["codim2", "dyadic"], required=True)
    p.add_argument("--k", type=int, default=4, help="exponent of the dyadic family")
    p.add_argument("--tau", type=int, nargs="+", required=True)
    common(p, characteristic=False)
    p.set_defaults(func=cmd_family)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        text, code = args.func(args)
    except WmodError as err:
        if getattr(args, "json", False):
            print(_dump({"schema_version": SCHEMA_VERSION, "error": _error_json(err)}))
        else:
            print(f"error: {err}", file=sys.stderr)
        return err.exit_code
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
