"""Command-line interface.

Subcommands:

    analyze    full report: spin status, almost-complex decision, symplectic
               and complex exclusion verdicts
    enumerate  list Chern candidates up to a coefficient bound
    family     print a built-in family member as a manifold file
    validate   cross-check a record's invariants

Manifolds come either from --family "M1 g=2" style specs or from --file in a
line-oriented key = value format (see parse_manifold_file).  Exit codes:
1 for parse errors, 2 for invariant validation failures, 0 otherwise.  The
default search bound is 32; the FOURFOLD_BOUND environment variable
overrides it and the --bound flag wins over both.  All output is
deterministic: two runs on the same input are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .abelian import Presentation, PresentationError, parse_abelian_group
from .classification import exclude_complex, exclude_symplectic
from .families import FamilyId, FamilyParameterError, family_invariants, known_discrepancies
from .forms import FormError, build_form
from .obstruction import (
    DEFAULT_BOUND,
    ChernEnumeration,
    InvariantError,
    ManifoldInvariants,
    StructureVerdict,
    VerdictStatus,
    decide_almost_complex,
    enumerate_chern_classes,
    is_spin,
    validate_invariants,
    wu_target,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2


class ManifoldFileError(ValueError):
    """A manifold file that does not follow the key = value format."""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; the exit-code contract
    # reserves 2 for validation failures, so route usage errors to 1
    def error(self, message):
        raise _UsageError(message)


_REQUIRED_KEYS = ("name", "chi", "tau", "form", "b1", "h1")


def parse_manifold_file(text: str) -> ManifoldInvariants:
    """Parse the line-oriented manifold format.

    Keys: name, chi, tau, form (form grammar), b1, h1 ("Z^r" plus optional
    "+ Z/t" summands), w2 (comma-separated bits, or 0 for the zero vector),
    gens and repeatable rel lines for a presentation.  '#' starts a comment.
    """
    values: dict[str, str] = {}
    relations: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ManifoldFileError(f"line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "rel":
            try:
                relations.append(tuple(int(x.strip()) for x in value.split(",")))
            except ValueError:
                raise ManifoldFileError(f"line {lineno}: bad relation") from None
            continue
        if key in values:
            raise ManifoldFileError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value

    missing = [k for k in _REQUIRED_KEYS if k not in values]
    if missing:
        raise ManifoldFileError(f"missing required keys: {', '.join(missing)}")
    unknown = set(values) - set(_REQUIRED_KEYS) - {"w2", "gens"}
    if unknown:
        raise ManifoldFileError(f"unknown keys: {', '.join(sorted(unknown))}")

    def as_int(key: str) -> int:
        try:
            return int(values[key])
        except ValueError:
            raise ManifoldFileError(f"{key} must be an integer, got {values[key]!r}") from None

    form = build_form(values["form"])
    h1 = parse_abelian_group(values["h1"])

    w2 = None
    if "w2" in values:
        if values["w2"] == "0":
            w2 = (0,) * form.rank
        else:
            try:
                w2 = tuple(int(x.strip()) for x in values["w2"].split(","))
            except ValueError:
                raise ManifoldFileError("w2 must be comma-separated bits or 0") from None

    presentation = None
    if "gens" in values or relations:
        if "gens" not in values:
            raise ManifoldFileError("rel lines need a gens line")
        try:
            presentation = Presentation(as_int("gens"), tuple(relations))
        except PresentationError as exc:
            raise ManifoldFileError(str(exc)) from None

    return ManifoldInvariants(
        name=values["name"],
        chi=as_int("chi"),
        tau=as_int("tau"),
        form=form,
        b1=as_int("b1"),
        h1=h1,
        w2=w2,
        presentation=presentation,
    )


def format_manifold_file(m: ManifoldInvariants) -> str:
    """Serialize a record to the manifold file format (parse round-trips)."""
    lines = [
        "# fourfold manifold record",
        f"name = {m.name}",
        f"chi = {m.chi}",
        f"tau = {m.tau}",
        f"form = {m.form.descriptor()}",
        f"b1 = {m.b1}",
        f"h1 = {m.h1}",
    ]
    if m.w2 is not None:
        if any(m.w2):
            lines.append("w2 = " + ",".join(str(v) for v in m.w2))
        else:
            lines.append("w2 = 0")
    if m.presentation is not None:
        lines.append(f"gens = {m.presentation.generators}")
        lines.extend(
            "rel = " + ",".join(str(x) for x in rel)
            for rel in m.presentation.relations
        )
    return "\n".join(lines) + "\n"


def _load_manifold(args) -> ManifoldInvariants:
    if args.family is not None:
        return family_invariants(FamilyId.parse(args.family))
    with open(args.file, "r", encoding="ascii") as handle:
        return parse_manifold_file(handle.read())


def _resolve_bound(args) -> int:
    if args.bound is not None:
        return args.bound
    env = os.environ.get("FOURFOLD_BOUND")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"FOURFOLD_BOUND must be an integer, got {env!r}") from None
    return DEFAULT_BOUND


def _verdict_dict(v: StructureVerdict) -> dict:
    witness = None
    if v.witness is not None:
        witness = {
            "coefficients": list(v.witness.coefficients),
            "square": v.witness.square,
        }
    return {
        "status": str(v.status),
        "witness": witness,
        "reasons": list(v.reasons),
        "assumptions": list(v.assumptions),
        "search_bound": v.search_bound,
    }


def _manifold_dict(m: ManifoldInvariants) -> dict:
    return {
        "name": m.name,
        "chi": m.chi,
        "tau": m.tau,
        "b1": m.b1,
        "b2": m.form.rank,
        "form": m.form.descriptor(),
        "h1": str(m.h1),
        "w2": list(m.w2) if m.w2 is not None else None,
    }


def _emit_json(document: dict) -> None:
    print(json.dumps(document, indent=2))


def _kv(key: str, value, indent: int = 0) -> str:
    pad = " " * indent
    return f"{pad}{key:<{18 - indent}} {value}"


def _manifold_lines(m: ManifoldInvariants) -> list[str]:
    lines = [_kv("manifold", m.name)]
    lines.append(_kv("chi", m.chi, 2))
    lines.append(_kv("tau", m.tau, 2))
    lines.append(_kv("b1", m.b1, 2))
    lines.append(_kv("b2", m.form.rank, 2))
    lines.append(_kv("form", m.form.descriptor(), 2))
    lines.append(_kv("H1", m.h1, 2))
    if m.w2 is not None:
        w2_text = ",".join(str(v) for v in m.w2) if any(m.w2) else "0"
        lines.append(_kv("w2", w2_text, 2))
    return lines


def _verdict_lines(label: str, v: StructureVerdict) -> list[str]:
    lines = [_kv(label, v.status)]
    if v.witness is not None:
        lines.append(_kv("c1", v.witness, 2))
        lines.append(_kv("square", v.witness.square, 2))
    lines.extend(_kv("reason", r, 2) for r in v.reasons)
    lines.extend(_kv("assuming", a, 2) for a in v.assumptions)
    if v.search_bound is not None:
        lines.append(_kv("search bound", v.search_bound, 2))
    return lines


def _cascade(extra: Sequence[str] = ()) -> StructureVerdict:
    # an almost-complex obstruction overrides the downstream engines
    return StructureVerdict.not_exists("no almost complex structure", *extra)


def _analysis(m: ManifoldInvariants, bound: int, assume_pi1_distinct: bool):
    spin = is_spin(m.form, m.h1)
    almost_complex = decide_almost_complex(m, bound=bound)
    symplectic = exclude_symplectic(m, assume_pi1_distinct)
    complex_verdict = exclude_complex(m, assume_pi1_distinct)
    if almost_complex.status is VerdictStatus.NOT_EXISTS:
        vii = [r for r in complex_verdict.reasons if r.startswith("class VII excluded")]
        symplectic = _cascade()
        complex_verdict = _cascade(vii)
    return spin, almost_complex, symplectic, complex_verdict, known_discrepancies(m)


def _cmd_analyze(args) -> int:
    m = _load_manifold(args)
    bound = _resolve_bound(args)
    spin, ac, sym, cpx, notes = _analysis(m, bound, args.assume_pi1_distinct)
    if args.json:
        _emit_json(
            {
                "manifold": _manifold_dict(m),
                "spin": str(spin),
                "almost_complex": _verdict_dict(ac),
                "symplectic": _verdict_dict(sym),
                "complex": _verdict_dict(cpx),
                "discrepancies": list(notes),
            }
        )
        return EXIT_OK
    lines = _manifold_lines(m)
    lines.append(_kv("spin", spin))
    lines.extend(_verdict_lines("almost complex", ac))
    lines.extend(_verdict_lines("symplectic", sym))
    lines.extend(_verdict_lines("complex", cpx))
    lines.extend(_kv("discrepancy", note) for note in notes)
    print("\n".join(lines))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    m = _load_manifold(args)
    bound = _resolve_bound(args)
    result: ChernEnumeration = enumerate_chern_classes(m, bound=bound)
    target = wu_target(m.chi, m.tau)
    if args.json:
        _emit_json(
            {
                "manifold": _manifold_dict(m),
                "target_square": target,
                "complete": result.complete,
                "bound": result.bound,
                "witnesses": [
                    {"coefficients": list(w.coefficients), "square": w.square}
                    for w in result.witnesses
                ],
            }
        )
        return EXIT_OK
    lines = _manifold_lines(m)
    lines.append(_kv("target square", target))
    marker = "COMPLETE" if result.complete else f"BOUNDED({result.bound})"
    lines.append(_kv("completeness", marker))
    lines.append(_kv("witnesses", len(result.witnesses)))
    lines.extend(f"  {w}" for w in result.witnesses)
    print("\n".join(lines))
    return EXIT_OK


def _cmd_family(args) -> int:
    m = family_invariants(FamilyId.parse(args.family))
    sys.stdout.write(format_manifold_file(m))
    return EXIT_OK


def _cmd_validate(args) -> int:
    m = _load_manifold(args)
    violations = validate_invariants(m)
    if args.json:
        _emit_json(
            {
                "manifold": _manifold_dict(m),
                "valid": not violations,
                "violations": violations,
            }
        )
    else:
        lines = _manifold_lines(m)
        lines.append(_kv("status", "ok" if not violations else "invalid"))
        lines.extend(_kv("violation", v) for v in violations)
        print("\n".join(lines))
    return EXIT_OK if not violations else EXIT_INVALID


def _add_source_flags(parser: _Parser, family_only: bool = False) -> None:
    parser.add_argument("--family", metavar="SPEC", help='family spec, e.g. "M1 g=2"')
    if not family_only:
        parser.add_argument("--file", metavar="PATH", help="manifold file to read")


def build_parser() -> _Parser:
    parser = _Parser(prog="fourfold", description="structure obstructions for 4-manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full structure report")
    _add_source_flags(analyze)
    analyze.add_argument("--assume-pi1-distinct", action="store_true")
    analyze.add_argument("--bound", type=int, default=None)
    analyze.add_argument("--json", action="store_true")
    analyze.set_defaults(handler=_cmd_analyze)

    enumerate_cmd = sub.add_parser("enumerate", help="list Chern candidates")
    _add_source_flags(enumerate_cmd)
    enumerate_cmd.add_argument("--bound", type=int, default=None)
    enumerate_cmd.add_argument("--json", action="store_true")
    enumerate_cmd.set_defaults(handler=_cmd_enumerate)

    family = sub.add_parser("family", help="emit a family member as a manifold file")
    _add_source_flags(family, family_only=True)
    family.set_defaults(handler=_cmd_family)

    validate = sub.add_parser("validate", help="cross-check invariants")
    _add_source_flags(validate)
    validate.add_argument("--json", action="store_true")
    validate.set_defaults(handler=_cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "family", None) is None and getattr(args, "file", None) is None:
            raise _UsageError("one of --family or --file is required")
        if getattr(args, "family", None) is not None and getattr(args, "file", None) is not None:
            raise _UsageError("--family and --file are mutually exclusive")
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FormError, PresentationError, FamilyParameterError, ManifoldFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantError as exc:
        for violation in exc.violations:
            print(f"invalid: {violation}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
