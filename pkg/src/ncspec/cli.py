"""Command-line front end.

Exit codes: ``analyze`` returns 0 when lambda is left adjoint to rho, 1 when
it is not, 2 when the equivalent conditions disagree (a bug); ``check-3-15``
returns 0 when they agree and 2 otherwise.  Bad input files exit with 3,
and argparse usage errors with 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .algebra import ValidationError
from .correspondence import analyze_hom, r_of
from .exactlin import FieldSpec
from .harness import FIXTURES, InstanceSpec, exhaustive_ideal_enumeration, fuzz, _enumerable
from .ideals import UnsupportedCharacteristic, jacobson_radical, nilpotency_index, two_sided_ideal_generated
from .serialize import (
    FileFormatError,
    algebra_to_dict,
    dumps,
    hom_to_dict,
    load_algebra,
    load_hom,
    save_algebra,
    save_hom,
)
from .spectrum import NonSplitCenter, RankUncertified, all_closed_sets, goldie_rank, spec, v_of
from .topology import members

EXIT_INPUT = 3


def _emit(args, text: str = "", payload=None) -> None:
    if args.json and payload is not None:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif not args.quiet and text:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _field(args) -> Optional[FieldSpec]:
    return FieldSpec.from_string(args.field) if args.field else None


def _mask_text(s, mask: int) -> str:
    return "{" + ", ".join(s.describe_mask(mask)) + "}"


# --------------------------------------------------------------------------


def spec_report(a) -> dict:
    s = spec(a)
    F = a.field
    rad = s.radical
    primes = []
    for p in s:
        primes.append({
            "basis": [[F.format(x) for x in v] for v in p.ideal.basis],
            "text": p.describe(),
            "quotient_dim": p.quotient_dim,
            "goldie_rank": goldie_rank(a, p).rank,
        })
    return {
        "field": str(F),
        "dim": a.dim,
        "radical": {"basis": [[F.format(x) for x in v] for v in rad.basis], "text": rad.describe()},
        "primes": primes,
        "closed_sets": len(all_closed_sets(s).closed),
    }


def cmd_spec(args) -> int:
    a = load_algebra(args.file, _field(args))
    rep = spec_report(a)
    n = len(rep["primes"])
    lines = [f"{n} prime{'s' if n != 1 else ''}; rad = {rep['radical']['text']}"]
    for k, p in enumerate(rep["primes"]):
        lines.append(
            f"  P{k + 1} = {p['text']}: quotient dim {p['quotient_dim']}, rank {p['goldie_rank']}"
        )
    lines.append(f"{rep['closed_sets']} closed sets")
    _emit(args, "\n".join(lines), rep)
    return 0


def cmd_radical(args) -> int:
    a = load_algebra(args.file, _field(args))
    rad = jacobson_radical(a)
    t = nilpotency_index(rad)
    F = a.field
    payload = {
        "radical": {"basis": [[F.format(x) for x in v] for v in rad.basis], "text": rad.describe()},
        "dim": rad.dim,
        "nilpotency_index": t,
    }
    _emit(args, f"rad = {rad.describe()} (dim {rad.dim}, nilpotency index {t})", payload)
    return 0


def cmd_ideals(args) -> int:
    a = load_algebra(args.file, _field(args))
    F = a.field
    if _enumerable(a):
        ideals = exhaustive_ideal_enumeration(a)
        complete = True
    else:
        from .correspondence import ideal_family

        ideals = ideal_family(a)
        complete = False
    payload = {
        "complete": complete,
        "ideals": [
            {"basis": [[F.format(x) for x in v] for v in i.basis], "text": i.describe()}
            for i in ideals
        ],
    }
    head = (
        f"{len(ideals)} two-sided ideals (exhaustive)"
        if complete
        else f"{len(ideals)} ideals built from the spectrum (not exhaustive over this field)"
    )
    _emit(args, "\n".join([head] + ["  " + i.describe() for i in ideals]), payload)
    return 0


def _analysis_text(f, a) -> str:
    sS, sR = a.source_spec, a.target_spec
    lines = ["Spec S:"]
    lines += [f"  P{k + 1} = {p.describe()}" for k, p in enumerate(sS)]
    lines.append("Spec R:")
    lines += [f"  Q{k + 1} = {q.describe()}" for k, q in enumerate(sR)]
    lines.append("r:")
    for k, t in enumerate(a.r_table):
        img = ", ".join(f"Q{j + 1}" for j in members(t))
        lines.append(f"  P{k + 1} -> {{{img}}}")
    flags = a.flags()
    lines.append("flags:")
    lines += [f"  {k}: {v}" for k, v in flags.items()]
    ts = ", ".join("none" if t is None else str(t) for t in a.t_values)
    lines.append(f"t per prime of R: {ts}")
    if a.nearly_centralizing_primes:
        lines.append(f"nearly centralizing, t = {max(a.t_values, default=1)}")
    if not a.single_valued:
        ip = a.single_valued.witness
        lines.append(f"r not single-valued at P = {sS[ip].describe()}")
    if not a.prime_pair_criterion:
        ip, iq = a.prime_pair_criterion.witness
        lines.append(
            f"witness (P{ip + 1}, Q{iq + 1}): Q^S inside P but Q not inside sqrt(f^-1(P))"
        )
    if not a.adjoint:
        u, v = a.adjoint.witness
        lines.append(
            f"adjunction fails at U = {_mask_text(sS, u)}, V = {_mask_text(sR, v)}"
        )
    lines.append("consistent" if a.consistent else "INCONSISTENT: " + "; ".join(a.inconsistencies))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    f = load_hom(args.file, _field(args))
    a = analyze_hom(f)
    _emit(args, _analysis_text(f, a), a.to_json())
    if not a.consistent:
        return 2
    return 0 if a.adjoint else 1


def cmd_check(args) -> int:
    f = load_hom(args.file, _field(args))
    a = analyze_hom(f)
    payload = {"consistent": a.consistent, "flags": a.flags(), "inconsistencies": a.inconsistencies}
    text = "consistent: all equivalent conditions agree (" + (
        "adjoint" if a.adjoint else "not adjoint") + ")"
    if not a.consistent:
        text = "INCONSISTENT: " + "; ".join(a.inconsistencies)
    _emit(args, text, payload)
    return 0 if a.consistent else 2


def _field_for_examples(args) -> FieldSpec:
    return _field(args) or FieldSpec(0)


def _nilpotent_example_sides(f):
    """Both sides of r^[-1] V_R(I) versus V_S(<f(I)>) for the last prime I of R."""
    r = r_of(f)
    sS, sR = r.source_spec, r.target_spec
    i = sR[len(sR) - 1].ideal
    lhs = r.strong_preimage(v_of(sR, i))
    gen = two_sided_ideal_generated(f.target, f.image_of(i.carrier).basis)
    rhs = v_of(sS, gen)
    return i, lhs, rhs


def cmd_examples(args) -> int:
    F = _field_for_examples(args)
    if args.action == "list":
        lines = [f"{name}: {fx.description}" for name, fx in FIXTURES.items()]
        _emit(args, "\n".join(lines), {"examples": list(FIXTURES)})
        return 0
    if args.action == "export":
        if not args.name:
            raise SystemExit("examples export needs a target directory")
        out = args.name
        os.makedirs(out, exist_ok=True)
        for name, fx in FIXTURES.items():
            f = fx.hom(F)
            d = os.path.join(out, name)
            os.makedirs(d, exist_ok=True)
            save_algebra(f.source, os.path.join(d, "R.json"))
            save_algebra(f.target, os.path.join(d, "S.json"))
            save_hom(f, os.path.join(d, "hom.json"), "R.json", "S.json")
        _emit(args, f"wrote {len(FIXTURES)} examples to {out}", {"written": list(FIXTURES)})
        return 0
    names = list(FIXTURES) if args.name in (None, "all") else [args.name]
    unknown = [n for n in names if n not in FIXTURES]
    if unknown:
        sys.stderr.write(f"unknown example {unknown[0]!r}; try 'examples list'\n")
        return EXIT_INPUT
    results = {}
    lines = []
    for name in names:
        fx = FIXTURES[name]
        diff = fx.verify(F)
        results[name] = {"pass": not diff, "diff": {k: list(v) for k, v in diff.items()}}
        lines.append(f"{name}: {'PASS' if not diff else 'FAIL'}")
        for k, (exp, act) in diff.items():
            lines.append(f"  {k}: expected {exp}, got {act}")
        if name == "ex-nilpotent-m2":
            f = fx.hom(F)
            sS = spec(f.target)
            i, lhs, rhs = _nilpotent_example_sides(f)
            lines.append(
                f"  I = {i.describe()}: r^[-1] V_R(I) = {_mask_text(sS, lhs)} "
                f"{'!=' if lhs != rhs else '=='} {_mask_text(sS, rhs)} = V_S(<f(I)>)"
            )
            results[name]["strong_preimage"] = sS.describe_mask(lhs)
            results[name]["v_of_generated"] = sS.describe_mask(rhs)
    passed = sum(1 for v in results.values() if v["pass"])
    if len(names) > 1:
        lines.append(f"{passed}/{len(names)} PASS")
    _emit(args, "\n".join(lines), results)
    return 0 if passed == len(names) else 1


def cmd_fuzz(args) -> int:
    fields = [_field(args)] if args.field else [FieldSpec(5), FieldSpec(7), FieldSpec(0)]

    specs = [
        InstanceSpec(args.seed + k, fields[k % len(fields)], max_dim=args.max_dim,
                     max_source_dim=min(args.max_dim, 6))
        for k in range(args.count)
    ]
    bad = 0
    for rec in fuzz(specs, check=not args.no_oracles):
        if not rec["consistency"]:
            bad += 1
        if not args.quiet:
            sys.stdout.write(json.dumps(rec, sort_keys=True) + "\n")
    if bad:
        sys.stderr.write(f"{bad} of {len(specs)} instances failed\n")
    return 2 if bad else 0


def cmd_validate(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{args.file}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if isinstance(d, dict) and "matrix" in d:
        f = load_hom(args.file, _field(args))
        canon = hom_to_dict(f, d["source"], d["target"])
        kind = f"hom {f.source.dim} -> {f.target.dim}"
    else:
        a = load_algebra(args.file, _field(args))
        canon = algebra_to_dict(a)
        kind = f"algebra of dim {a.dim} over {a.field}"
    if args.canonicalize:
        text = dumps(canon)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    _emit(args, f"valid {kind}", {"valid": True})
    return 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--field", help="override the field: Q or Fp:<p>")
    common.add_argument("--seed", type=int, default=0, help="base seed for fuzz")
    common.add_argument("--max-dim", type=int, default=9, help="largest algebra dimension for fuzz")
    common.add_argument("--quiet", action="store_true", help="suppress text output")

    parser = argparse.ArgumentParser(
        prog="ncspec",
        description="Prime spectra of finite-dimensional algebras and adjointness of lambda and rho.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in [
        ("spec", cmd_spec, "prime spectrum, radical, Goldie ranks"),
        ("radical", cmd_radical, "Jacobson radical and its nilpotency index"),
        ("ideals", cmd_ideals, "two-sided ideals"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", help="algebra JSON file")
        p.set_defaults(func=func)

    p = sub.add_parser("analyze", parents=[common], help="full analysis of a homomorphism")
    p.add_argument("file", help="hom JSON file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-3-15", parents=[common],
                       help="check that the equivalent adjointness conditions agree")
    p.add_argument("file", help="hom JSON file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("examples", parents=[common], help="list, run or export the shipped examples")
    p.add_argument("action", choices=["list", "run", "export"])
    p.add_argument("name", nargs="?", help="example name, 'all', or export directory")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("fuzz", parents=[common], help="seeded random instances, one JSON line each")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--no-oracles", action="store_true", help="skip the brute-force cross-checks")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("validate", parents=[common], help="validate an algebra or hom file")
    p.add_argument("file")
    p.add_argument("--canonicalize", action="store_true", help="print the canonical form")
    p.add_argument("-o", "--output", help="write the canonical form here")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileFormatError, ValidationError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (NonSplitCenter, RankUncertified, UnsupportedCharacteristic) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
