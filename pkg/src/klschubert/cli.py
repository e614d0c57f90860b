"""Command-line interface.

Subcommands: check, klpoly, gamma, class, restrict, billey, reproduce-paper.
Exit codes: 0 all requested identities hold, 1 an identity failed, 2 usage.
Output is deterministic for a fixed seed and configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import field
from .billey import demazure_module
from .checks import Equality, RunConfig, check_golden, run_checks
from .hecke import Hecke, TwistedElement, hecke
from .hyperbolic import grassmannian_duality_check, kl_class
from .klpoly import kl_polynomial
from .localization import k_duality_check
from .weyl import MAX_RANK, WeylGroup


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klsc",
        description="Exact Kazhdan-Lusztig Schubert calculus checks and tables")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, rank_default: int | None = 2):
        if rank_default is not None:
            p.add_argument("--rank", type=int, default=rank_default,
                           help=f"rank of the root system (1..{MAX_RANK})")
        p.add_argument("--J", type=str, default=None,
                       help="parabolic subset, e.g. '1,2'")
        p.add_argument("--format", dest="fmt", default="text",
                       choices=("text", "json", "csv"))

    p = sub.add_parser("check", help="verify named identities")
    common(p)
    p.add_argument("--lemma", "--check", dest="selector", default=None,
                   help="check selector (see docs); default runs all")
    p.add_argument("--all", action="store_true", help="run every check")
    p.add_argument("--theory", default="m", choices=("m", "h"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fast", action="store_true",
                   help="probabilistic screening at random rational points")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("klpoly", help="Kazhdan-Lusztig polynomial table")
    common(p)
    p.add_argument("--u", type=str, default=None, help="reduced word, e.g. '2,1'")
    p.add_argument("--v", type=str, default=None)
    p.set_defaults(func=cmd_klpoly)

    p = sub.add_parser("gamma", help="KL basis elements in the delta basis")
    common(p)
    p.add_argument("--sign", required=True, choices=("+", "-"))
    p.add_argument("--element", required=True,
                   help="reduced word of the indexing element, e.g. '2,1'")
    p.add_argument("--hat", action="store_true",
                   help="word-wise product instead of the KL basis element")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("class", help="KL-Schubert class restrictions")
    common(p, rank_default=3)
    p.add_argument("--u", required=True, help="reduced word of the element")
    p.add_argument("--variant", default="ctildej",
                   choices=("c", "ctilde", "cj", "ctildej", "dual"))
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("restrict", help="restriction of an opposite KL class")
    common(p, rank_default=4)
    p.add_argument("--w", required=True, help="reduced word of the fixed point")
    p.add_argument("--u", required=True, help="reduced word, must lie in W^J")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("billey", help="root-polynomial coefficients")
    common(p, rank_default=4)
    p.add_argument("mode", nargs="?", default="single", choices=("single", "table"))
    p.add_argument("--w", help="reduced word of the fixed point")
    p.add_argument("--u", help="reduced word, must lie in W^J")
    p.set_defaults(func=cmd_billey)

    p = sub.add_parser("reproduce-paper",
                       help="recompute the bundled rank-4 worked example "
                            "and diff against the golden table")
    p.add_argument("--format", dest="fmt", default="text",
                   choices=("text", "json"))
    p.set_defaults(func=cmd_reproduce)
    return parser


def _parse_j(W: WeylGroup, text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    return W._jkey(int(x) for x in text.split(","))


# -- check ---------------------------------------------------------------------


def cmd_check(args) -> int:
    W = hecke(args.rank).W
    jt = _parse_j(W, args.J)
    selector = "all" if args.all or args.selector is None else args.selector
    cfg = RunConfig(rank=args.rank, J=jt, theory=args.theory, fmt=args.fmt,
                    selector=selector, fast=args.fast, seed=args.seed)
    if args.fmt in ("csv", "json") and selector in ("kdual1", "kdual2", "hypergp"):
        return _emit_pairing_matrix(cfg)
    results = run_checks(cfg)
    if args.fmt == "json":
        print(json.dumps([{"name": r.name, "passed": r.passed, "detail": r.lines}
                          for r in results], indent=1))
    elif args.fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["check", "passed"])
        for r in results:
            writer.writerow([r.name, "pass" if r.passed else "fail"])
    else:
        for r in results:
            print(r.summary())
            for line in r.lines:
                print(f"    {line}")
    return 0 if all(r.passed for r in results) else 1


def _emit_pairing_matrix(cfg: RunConfig) -> int:
    H = hecke(cfg.rank)
    if cfg.selector == "kdual1":
        report = k_duality_check(H)
    elif cfg.selector == "kdual2":
        if cfg.J is None:
            raise ValueError("kdual2 needs --J")
        report = k_duality_check(H, cfg.J)
    else:
        if cfg.J is None:
            raise ValueError("hypergp needs --J")
        report = grassmannian_duality_check(H, cfg.J)
    W = H.W
    if cfg.fmt == "json":
        payload = {
            "rows": [W.perm_str(w) for w in report.rows],
            "cols": [W.perm_str(v) for v in report.cols],
            "expected_diagonal": report.expected.to_json_obj(),
            "matrix": [[report.values[(w, v)].to_json_obj() for v in report.cols]
                       for w in report.rows],
            "passed": report.passed,
            "failures": report.failures,
        }
        print(json.dumps(payload, indent=1))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow([""] + [W.perm_str(v) for v in report.cols])
        for w in report.rows:
            writer.writerow([W.perm_str(w)]
                            + [report.values[(w, v)].to_text() for v in report.cols])
    return 0 if report.passed else 1


# -- tables and elements ----------------------------------------------------------


def cmd_klpoly(args) -> int:
    H = hecke(args.rank)
    W = H.W
    if (args.u is None) != (args.v is None):
        raise ValueError("give both --u and --v, or neither for the full table")
    if args.u is not None:
        pairs = [(W.word_to_perm(W.parse_word(args.u)),
                  W.word_to_perm(W.parse_word(args.v)))]
    else:
        pairs = [(u, v) for u in W.elements for v in W.elements
                 if W.bruhat_leq(u, v)]
    rows = [(W.perm_str(u), W.perm_str(v), list(kl_polynomial(W, u, v).coeffs))
            for u, v in pairs]
    if args.fmt == "json":
        print(json.dumps([{"u": u, "v": v, "coeffs": c} for u, v, c in rows],
                         indent=1))
    elif args.fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["u", "v", "coefficients"])
        for u, v, c in rows:
            writer.writerow([u, v, " ".join(map(str, c))])
    else:
        for u, v, c in rows:
            print(f"P[{u} ; {v}] = {c}")
    return 0


def _print_twisted(H: Hecke, z: TwistedElement, fmt: str) -> None:
    W = H.W
    if fmt == "json":
        payload = {W.perm_str(w): z.coefficient(w).to_json_obj()
                   for w in z.support()}
        print(json.dumps(payload, indent=1))
    else:
        for w in z.support():
            print(f"d[{W.perm_str(w)}]  {z.coefficient(w).to_text()}")


def cmd_gamma(args) -> int:
    H = hecke(args.rank)
    W = H.W
    word = W.parse_word(args.element)
    if args.hat:
        z = H.gamma_hat(word, args.sign)
    else:
        z = H.gamma(W.word_to_perm(word), args.sign)
    _print_twisted(H, z, args.fmt)
    return 0


def cmd_class(args) -> int:
    H = hecke(args.rank)
    W = H.W
    jt = _parse_j(W, args.J)
    u = W.word_to_perm(W.parse_word(args.u))
    cls = kl_class(H, u, args.variant, jt)
    if args.fmt == "json":
        payload = {W.perm_str(w): cls.cls.restriction(w).to_json_obj()
                   for w in W.elements}
        print(json.dumps(payload, indent=1))
    elif args.fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["fixed point", "restriction"])
        for w in W.elements:
            writer.writerow([W.perm_str(w), cls.cls.restriction(w).to_text()])
    else:
        for w in W.elements:
            print(f"f[{W.perm_str(w)}]  {cls.cls.restriction(w).to_text()}")
    return 0


def cmd_restrict(args) -> int:
    H = hecke(args.rank)
    W = H.W
    jt = _parse_j(W, args.J)
    if jt is None:
        raise ValueError("restrict needs --J")
    mod = demazure_module(H, jt)
    u = W.word_to_perm(W.parse_word(args.u))
    w = W.word_to_perm(W.parse_word(args.w))
    val = mod.restriction(u, w)
    if args.fmt == "json":
        print(json.dumps({"u": W.perm_str(u), "w": W.perm_str(w),
                          "value": val.to_json_obj()}, indent=1))
    else:
        print(val.to_text())
    return 0


def cmd_billey(args) -> int:
    H = hecke(args.rank)
    W = H.W
    jt = _parse_j(W, args.J)
    if jt is None:
        raise ValueError("billey needs --J")
    mod = demazure_module(H, jt)
    if args.mode == "table":
        reps = W.min_coset_reps(jt)
        rows = []
        for w in W.elements:
            rp = mod.root_polynomial(mod.words[w])
            rows.append([H.mu_power(W.length(u)) * rp.coefficient(u) for u in reps])
        if args.fmt == "json":
            payload = {
                "cols": [W.perm_str(u) for u in reps],
                "rows": {W.perm_str(w): [v.to_json_obj() for v in row]
                         for w, row in zip(W.elements, rows)},
            }
            print(json.dumps(payload, indent=1))
        else:
            writer = csv.writer(sys.stdout)
            writer.writerow([""] + [W.perm_str(u) for u in reps])
            for w, row in zip(W.elements, rows):
                writer.writerow([W.perm_str(w)] + [v.to_text() for v in row])
        return 0
    if args.w is None or args.u is None:
        raise ValueError("billey needs --w and --u (or the 'table' mode)")
    w = W.word_to_perm(W.parse_word(args.w))
    u = W.word_to_perm(W.parse_word(args.u))
    val = mod.billey_coefficient(w, u)
    if args.fmt == "json":
        print(json.dumps({"w": W.perm_str(w), "u": W.perm_str(u),
                          "coefficient": val.to_json_obj()}, indent=1))
    else:
        print(val.to_text())
    return 0


# -- golden example ------------------------------------------------------------------


def _subword_label(word: tuple[int, ...], positions: tuple[int, ...]) -> str:
    bits = [f"s{letter}" if k + 1 in positions else "-"
            for k, letter in enumerate(word)]
    return "(" + ",".join(bits) + ")"


def cmd_reproduce(args) -> int:
    from importlib import resources

    data = json.loads(resources.files("klschubert.data")
                      .joinpath("golden_a4.json").read_text())
    word = tuple(data["word"])
    result = check_golden(Equality())
    H = hecke(data["rank"])
    W = H.W
    mod = demazure_module(H, tuple(data["J"]))
    u = W.word_to_perm(tuple(data["u_word"]))
    contrib = {tuple(p + 1 for p in mask): val for mask, val in
               mod.subword_contributions(word, u).items()}
    if args.fmt == "json":
        payload = {
            "word": list(word),
            "u": list(data["u_word"]),
            "J": data["J"],
            "terms": [{"subword": _subword_label(word, tuple(t["positions"])),
                       "positions": t["positions"],
                       "value": t["value"]} for t in data["terms"]],
            "passed": result.passed,
            "detail": result.lines,
        }
        print(json.dumps(payload, indent=1))
        return 0 if result.passed else 1
    print(f"word {','.join(map(str, word))},  u = {','.join(map(str, data['u_word']))},"
          f"  J = {{{','.join(map(str, data['J']))}}}")
    for t in data["terms"]:
        mask = tuple(t["positions"])
        label = _subword_label(word, mask)
        got = contrib.get(mask)
        status = "ok   " if got is not None and got == field.FieldElement.from_json_obj(
            data["rank"], t["value"]) else "DIFF "
        print(f"  {status}{label}  {t['text']}")
    for line in result.lines:
        print(f"  {line}")
    print(result.summary())
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())
