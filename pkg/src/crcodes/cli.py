"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 budget exceeded,
4 the code is outside the classification (NOT_APPLICABLE).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from . import config
from .classify import build_automorphisms, classify
from .code import (code_from_generator, code_from_json, code_to_json, covering_radius, min_distance,
                   monomial_image, packing_radius, weight_distribution)
from .constructions import direct, direct_vectors, hamming, kron_code, q_repeat_times, repetition
from .errors import BudgetExceeded, CodeError, Indeterminate
from .gf import FieldSpec, gf
from .linalg import MonomialMap
from .regularity import (CodeSet, covering_set, cr_oracle_set, is_completely_regular,
                         is_completely_transitive, repeat_recurrence_check,
                         sphere_identity_holds)

EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET, EXIT_NA = 1, 2, 3, 4


class UsageError(Exception):
    pass


def _int_range(text: str) -> list[int]:
    """``"3"`` -> [3]; ``"2..4"`` -> [2, 3, 4]; ``"1,3"`` -> [1, 3]."""
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _field(args) -> FieldSpec:
    poly = None
    if getattr(args, "poly", None):
        poly = [int(c) for c in args.poly.split(",")]
    return gf(args.q, poly)


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _read_code(path: str):
    obj = _read_json(path)
    try:
        return code_from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path} is not a code file: {exc}") from exc


_FLAT_LIST = re.compile(r"\[[^\[\]{}]*\]")


def dumps(obj) -> str:
    """Indented JSON with lists of scalars kept on one line."""
    text = json.dumps(obj, indent=2)
    return _FLAT_LIST.sub(lambda m: re.sub(r"\s+", " ", m.group(0)).replace("[ ", "[")
                          .replace(" ]", "]"), text)


def _emit(args, obj, human: str | None = None):
    text = dumps(obj) if args.json or human is None else human
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- build -----------------------------------------------------------------------------


def cmd_build(args) -> int:
    spec = _field(args)
    family = args.family
    if family == "hamming":
        if args.mb is None:
            raise UsageError("hamming needs --mb")
        code = hamming(spec, args.mb)
    elif family == "repetition":
        if args.n is None:
            raise UsageError("repetition needs --n")
        code = repetition(spec, args.n)
    elif family == "direct":
        if not args.h:
            raise UsageError("direct needs --h")
        code = direct(spec, [int(x) for x in args.h.split(",")])
    elif family == "kron":
        if args.na is None or args.mb is None:
            raise UsageError("kron needs --na and --mb")
        code = kron_code(spec, args.na, args.mb)
    else:
        if not args.input:
            raise UsageError("q-repeat needs --input")
        code = q_repeat_times(_read_code(args.input), args.times)
    args.json = True
    _emit(args, code_to_json(code))
    return 0


# -- analyze -----------------------------------------------------------------------------


def analyze_report(code) -> dict:
    cr, profile = is_completely_regular(code)
    report = {
        "q": code.spec.q,
        "n": code.n,
        "k": code.k,
        "d": min_distance(code),
        "e": packing_radius(code),
        "rho": covering_radius(code),
        "weight_distribution": [int(x) for x in weight_distribution(code)],
        "completely_regular": cr,
        "profile": profile.to_json() if cr else None,
    }
    return report


def cmd_analyze(args) -> int:
    code = _read_code(args.code)
    r = analyze_report(code)
    lines = [f"[{r['n']},{r['k']},{r['d']}]_{r['q']}  e={r['e']}  rho={r['rho']}",
             f"weight distribution: {r['weight_distribution']}",
             f"completely regular: {r['completely_regular']}"]
    if r["profile"]:
        for t, row in r["profile"]["alpha"].items():
            lines.append(f"  alpha[{t}] = {row}")
        if "n_a" in r["profile"]:
            lines.append(f"  n_a = {r['profile']['n_a']}")
    _emit(args, r, "\n".join(lines))
    return 0


# -- classify ------------------------------------------------------------------------------


def scramble_check(code, trials: int, seed: int) -> dict:
    reference = classify(code)
    rng = np.random.default_rng(seed)
    agree = 0
    failures = []
    for t in range(trials):
        sigma = MonomialMap.random(code.spec, code.n, rng)
        cert = classify(monomial_image(code, sigma))
        same = (cert.case, cert.n_a, cert.m_b, cert.peel_count) == (
            reference.case, reference.n_a, reference.m_b, reference.peel_count)
        if same and cert.verified == reference.verified:
            agree += 1
        else:
            failures.append(t)
    return {"trials": trials, "agree": agree, "failures": failures}


def cmd_classify(args) -> int:
    code = _read_code(args.code)
    cert = classify(code)
    out = cert.to_json()
    status = 0 if cert.applicable else EXIT_NA
    if args.scramble_check:
        out["scramble_check"] = sc = scramble_check(code, args.scramble_check, args.seed)
        if sc["agree"] != sc["trials"] and status == 0:
            status = EXIT_FAIL
    if cert.applicable:
        human = (f"{cert.case.value}: n_a={cert.n_a} n_b={cert.n_b} m_b={cert.m_b} "
                 f"peel_count={cert.peel_count} verified={cert.verified}")
    else:
        human = f"NOT_APPLICABLE: {cert.reason}"
    if args.scramble_check:
        human += f"\nscramble check: {sc['agree']}/{sc['trials']} agree"
    _emit(args, out, human)
    return status


# -- check -------------------------------------------------------------------------------


def _kron_params(args):
    for q in _int_range(args.q):
        spec = gf(q)
        for na in _int_range(args.na):
            for mb in _int_range(args.mb):
                yield spec, na, mb


def _suite_oracle(args):
    for spec, na, mb in _kron_params(args):
        code = kron_code(spec, na, mb)
        name = f"kron q={spec.q} na={na} mb={mb}"
        try:
            lhs = is_completely_regular(code)[0]
            rhs = cr_oracle_set(CodeSet.from_code(code))
        except BudgetExceeded as exc:
            yield {"case": name, "pass": False, "detail": str(exc)}
            continue
        yield {"case": name, "pass": lhs == rhs, "linear": lhs, "oracle": rhs}


def _suite_sphere_identity(args):
    for spec, na, mb in _kron_params(args):
        code = kron_code(spec, na, mb)
        cr, profile = is_completely_regular(code)
        name = f"kron q={spec.q} na={na} mb={mb}"
        if not cr or profile.rho != 1:
            yield {"case": name, "pass": False, "detail": "not completely regular with rho=1"}
            continue
        q = spec.q
        yield {"case": name, "pass": sphere_identity_holds(code, profile), "n_a": profile.n_a,
               "lhs": (q - 1) * code.n, "rhs": (q**code.redundancy - 1) * profile.n_a}


def recurrence_seeds(spec: FieldSpec, max_n: int):
    """Small seed codes for the q-repeat checks, including non-CR ones."""
    for n in range(2, max_n + 1):
        yield f"repetition n={n}", repetition(spec, n)
        m = n - 1
        for w in {m, max(1, m - 1)}:
            h = next(direct_vectors(spec, m, w))
            yield f"direct h={h}", direct(spec, h)
    if max_n >= 4:
        yield "span(1100)", code_from_generator(spec, [[1, 1, 0, 0]])


def _suite_recurrence(args):
    max_n = args.max_n
    for q in _int_range(args.q):
        spec = gf(q)
        for name, code in recurrence_seeds(spec, max_n):
            rep = q_repeat_times(code, 1)
            ok = repeat_recurrence_check(code, rep)
            same_rho = covering_radius(code) == covering_radius(rep)
            cr = is_completely_regular(code)[0]
            cr_rep = is_completely_regular(rep)[0]
            yield {"case": f"q={q} {name}", "pass": ok and same_rho and cr == cr_rep,
                   "recurrence": ok, "rho_preserved": same_rho, "cr": cr, "cr_repeat": cr_rep}


def _suite_transitive(args):
    for spec, na, mb in _kron_params(args):
        code = kron_code(spec, na, mb)
        name = f"kron q={spec.q} na={na} mb={mb}"
        cert = classify(code)
        gens = build_automorphisms(cert, target="input")
        try:
            ok, orbits = is_completely_transitive(code, "generated", gens)
        except Indeterminate as exc:
            ok, orbits = False, exc.orbits
        yield {"case": name, "pass": ok, "orbits": orbits, "generators": len(gens)}


SUITES = {
    "oracle": _suite_oracle,
    "eqn1": _suite_sphere_identity,
    "recurrence": _suite_recurrence,
    "transitive": _suite_transitive,
}


def cmd_check(args) -> int:
    results = list(SUITES[args.suite](args))
    passed = all(r["pass"] for r in results)
    out = {"suite": args.suite, "pass": passed, "cases": results}
    human = "\n".join(f"{'PASS' if r['pass'] else 'FAIL'}  {r['case']}" for r in results)
    _emit(args, out, human)
    return 0 if passed else EXIT_FAIL


# -- oracle ---------------------------------------------------------------------------------


def cmd_oracle(args) -> int:
    obj = _read_json(args.file)
    out = {}
    try:
        if "members" in obj:
            S = CodeSet.from_json(obj)
        else:
            code = code_from_json(obj)
            S = covering_set(code) if args.covering_set else CodeSet.from_code(code)
            if not args.covering_set:
                out["linear_check"] = is_completely_regular(code)[0]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.file}: {exc}") from exc
    out.update({"size": len(S), "n": S.n, "min_distance": S.min_distance(),
                "completely_regular": cr_oracle_set(S)})
    if "linear_check" in out:
        out["agree"] = out["linear_check"] == out["completely_regular"]
    human = "\n".join(f"{k}: {v}" for k, v in out.items())
    _emit(args, out, human)
    return 0 if out.get("agree", True) else EXIT_FAIL


# -- parser -----------------------------------------------------------------------------------


def _add_globals(p, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    b = config.Budgets()
    p.add_argument("--budget-codewords", type=int, default=d(b.codewords))
    p.add_argument("--budget-cosets", type=int, default=d(b.cosets))
    p.add_argument("--budget-oracle", type=int, default=d(b.oracle))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--json", action="store_true", default=d(False))
    p.add_argument("--out", metavar="FILE", default=d(None))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crcodes", description="Build, analyze and classify q-ary linear codes "
                                    "with covering radius 1.")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="construct a code")
    p.add_argument("family", choices=["hamming", "repetition", "direct", "kron", "q-repeat"])
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--poly", help="modulus coefficients, low degree first")
    p.add_argument("--mb", type=int)
    p.add_argument("--na", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--h", help="comma-separated column vector for the direct construction")
    p.add_argument("--input", help="code file for q-repeat ('-' for stdin)")
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", parents=[common], help="parameters and regularity of a code")
    p.add_argument("code", help="code JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[common], help="classification certificate")
    p.add_argument("code", help="code JSON file ('-' for stdin)")
    p.add_argument("--scramble-check", type=int, default=0, metavar="N")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--q", default="2")
    p.add_argument("--na", default="1..2")
    p.add_argument("--mb", default="2")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[common], help="definition-level regularity oracle")
    p.add_argument("file", help="code JSON or vector-set JSON")
    p.add_argument("--covering-set", action="store_true",
                   help="test the set of vectors at maximal distance from the code")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with config.budgets(codewords=args.budget_codewords, cosets=args.budget_cosets,
                            oracle=args.budget_oracle):
            return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, CodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
