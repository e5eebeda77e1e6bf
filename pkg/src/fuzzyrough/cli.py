"""
Command line front end.

    fuzzyrough check   REL [--tnorm T]
    fuzzyrough approx  REL --set a,b
    fuzzyrough lattice REL [--dot out.dot]
    fuzzyrough exact   REL
    fuzzyrough alpha   REL --set a,b --alpha 1/2

Exit status is 0 when every verification in the report holds, 1 when one is
falsified and 2 on bad input or an unmet precondition.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Any, Optional, Sequence

from .approximation import fuzzy_rough_pair, lemma2_bridge, prop1_check
from .core import CrispSet, TNorm, format_degree, parse_degree
from .document import parse_document
from .errors import FuzzyRoughError, NotAnEquivalence
from .exactness import alpha_identities, exactness_scan
from .lattice import MAX_UNIVERSE, stone_verify, theorem1_verify, to_dot
from .relation import FuzzyRelation, classes, relation_core, relation_support, spectrum, validate

EXIT_OK, EXIT_FALSIFIED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Report:
    """
    Ordered result data plus named verification verdicts. Text and machine
    renderings are produced from the same dictionary.
    """

    def __init__(self, command: str):
        self.data: dict[str, Any] = {"command": command}
        self.verifications: dict[str, bool] = {}
        self.warnings: list[str] = []

    def __setitem__(self, key: str, value: Any) -> None:
        self.data[key] = value

    def verify(self, name: str, ok: bool) -> None:
        self.verifications[name] = bool(ok)

    @property
    def passed(self) -> bool:
        return all(self.verifications.values())

    def as_dict(self) -> dict[str, Any]:
        out = dict(self.data)
        out["warnings"] = list(self.warnings)
        out["verifications"] = dict(self.verifications)
        out["all_verified"] = self.passed
        return out

    def render(self, fmt: str = "text") -> str:
        d = self.as_dict()
        if fmt == "machine":
            return json.dumps(d, indent=2, ensure_ascii=False) + "\n"
        lines = []
        for key, value in d.items():
            _render_text(lines, key, value, 0)
        return "\n".join(lines) + "\n"


def _render_text(lines: list[str], key: str, value: Any, depth: int) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        lines.append(f"{pad}{key}:")
        for k, v in value.items():
            _render_text(lines, k, v, depth + 1)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        lines.append(f"{pad}{key}:")
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}  -")
                for k, v in item.items():
                    _render_text(lines, k, v, depth + 2)
            else:
                lines.append(f"{pad}  - {_scalar(item)}")
    else:
        lines.append(f"{pad}{key}: {_scalar(value)}")


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)


def _set_text(s: Optional[CrispSet]) -> Optional[str]:
    return None if s is None else str(s)


def _vector(f) -> list[str]:
    return [format_degree(d) for d in f.degrees]


def _parse_set(relation: FuzzyRelation, text: Optional[str]) -> CrispSet:
    if text is None:
        raise InputError("--set is required for this command")
    labels = [x.strip() for x in text.split(",") if x.strip()]
    try:
        return CrispSet.from_labels(relation.universe, labels)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


def _require_equivalence(relation: FuzzyRelation, t: TNorm) -> None:
    report = validate(relation, t)
    if not report.is_equivalence:
        raise InputError(f"relation is not a {t.value}-equivalence; run `check` for witnesses")


def _support_blocks(relation: FuzzyRelation, t: TNorm):
    try:
        return classes(relation_support(relation, t)).label_blocks()
    except NotAnEquivalence:
        return None


def cmd_check(relation: FuzzyRelation, t: TNorm, args, report: Report) -> None:
    v = validate(relation, t)
    report["tnorm"] = t.value
    report["universe"] = list(relation.universe.elements)
    report["spectrum"] = [format_degree(d) for d in spectrum(relation)]
    report["spectrum_dually_well_ordered"] = v.spectrum_dually_well_ordered
    report["witnesses"] = [_witness_text(relation, w) for w in v.witnesses]
    report.verify("reflexive", v.reflexive)
    report.verify("symmetric", v.symmetric)
    report.verify("t_transitive", v.t_transitive)
    core = relation_core(relation)
    report["core_classes"] = classes(core).label_blocks() if core.is_equivalence() else None
    report["support_classes"] = _support_blocks(relation, t)
    if v.is_equivalence and t.is_positive:
        report.verify("support_is_equivalence", report.data["support_classes"] is not None)


def _witness_text(relation: FuzzyRelation, w: tuple) -> str:
    lab = relation.universe.label
    kind = w[0]
    if kind == "reflexive":
        return f"mu({lab(w[1])},{lab(w[1])}) = {w[2]} != 1"
    if kind == "symmetric":
        return f"mu({lab(w[1])},{lab(w[2])}) = {w[3]} != {w[4]} = mu({lab(w[2])},{lab(w[1])})"
    x, y, z = (lab(i) for i in w[1:4])
    return f"T(mu({x},{y}), mu({y},{z})) = {w[4]} > {w[5]} = mu({x},{z})"


def cmd_approx(relation: FuzzyRelation, t: TNorm, args, report: Report) -> None:
    _require_equivalence(relation, t)
    reference = _parse_set(relation, args.set)
    pair = fuzzy_rough_pair(reference, relation)
    bridge = lemma2_bridge(reference, relation, t)
    report["set"] = str(reference)
    report["lower"] = _vector(pair.lower)
    report["upper"] = _vector(pair.upper)
    report["A_E"] = _set_text(bridge.ae_lower)
    report["A^E"] = _set_text(bridge.ae_upper)
    report["A_S"] = _set_text(bridge.as_lower)
    report["A^S"] = _set_text(bridge.as_upper)
    report["bridge_mismatches"] = list(bridge.mismatches)
    report.verify("lemma2_bridge", bridge.verified)
    report.verify("reduces_to_core", prop1_check(reference, relation))


def cmd_lattice(relation: FuzzyRelation, t: TNorm, args, report: Report) -> None:
    if relation.n > MAX_UNIVERSE:
        raise InputError(f"universe has {relation.n} elements; `lattice` supports at most {MAX_UNIVERSE}")
    _require_equivalence(relation, t)
    witness = theorem1_verify(relation, t)
    fuzzy = witness.fuzzy
    stone = stone_verify(fuzzy)
    report["elements"] = len(fuzzy)
    report["crisp_elements"] = len(witness.crisp)
    report["cover_edges"] = len(fuzzy.covers)
    report["height"] = max(fuzzy.ranks)
    report["isomorphism_counterexamples"] = [list(map(str, c)) for c in witness.counterexamples]
    report["stone_counterexamples"] = [list(map(str, c)) for c in stone.counterexamples]
    report["complete_subset_check"] = "skipped" if stone.is_complete is None else stone.is_complete
    report.verify("order_isomorphism", witness.valid)
    report.verify("lattice", stone.is_lattice)
    report.verify("distributive", stone.is_distributive)
    report.verify("stone", stone.stone_identity)
    report.verify("dual_stone", stone.dual_stone_identity)
    report.verify("regular", stone.is_regular)
    if stone.is_complete is not None:
        report.verify("complete", stone.is_complete)
    report["summary"] = (
        f"{len(fuzzy)} elements; isomorphism {'verified' if witness.valid else 'FAILED'}; "
        f"distributive regular double Stone: {'yes' if stone.all_true else 'no'}"
    )
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_dot(fuzzy))
        report["dot"] = args.dot


def cmd_exact(relation: FuzzyRelation, t: TNorm, args, report: Report) -> None:
    _require_equivalence(relation, t)
    if not t.is_positive:
        raise InputError("exactness analysis needs a positive t-norm (min or product)")
    records = exactness_scan(relation, t)
    exact = [r for r in records if r.fuzzy_exact]
    report["exact_sets"] = [str(r.set) for r in exact]
    report["exact_memberships"] = [_vector(fuzzy_rough_pair(r.set, relation).lower) for r in exact]
    report["disagreements"] = [str(r.set) for r in records if not r.agree]
    report.verify("exact_iff_support_exact", all(r.agree for r in records))
    report.verify(
        "exact_is_indicator",
        all(fuzzy_rough_pair(r.set, relation).lower == r.set.indicator() for r in exact),
    )


def cmd_alpha(relation: FuzzyRelation, t: TNorm, args, report: Report) -> None:
    _require_equivalence(relation, t)
    reference = _parse_set(relation, args.set)
    if args.alpha is None:
        raise InputError("--alpha is required for this command")
    alpha = parse_degree(args.alpha)
    result = alpha_identities(relation, reference, alpha)
    report["set"] = str(reference)
    report["alpha"] = format_degree(alpha)
    report.verify("upper_identity", result.upper_holds)
    report.verify("lower_identity", result.lower_holds)


COMMANDS = {
    "check": cmd_check,
    "approx": cmd_approx,
    "lattice": cmd_lattice,
    "exact": cmd_exact,
    "alpha": cmd_alpha,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("relation", help="relation file (JSON or CSV); '-' reads stdin")
    common.add_argument("--tnorm", default="min", choices=["min", "product", "lukasiewicz"])
    common.add_argument("--format", default="text", choices=["text", "machine"])
    parser = argparse.ArgumentParser(prog="fuzzyrough", description="Fuzzy rough sets with crisp reference sets.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="validate the relation, spectrum, core and support classes")
    p = sub.add_parser("approx", parents=[common], help="approximations of a reference set")
    p.add_argument("--set", help="comma-separated labels; empty string for the empty set")
    p = sub.add_parser("lattice", parents=[common], help="enumerate lattices and verify their structure")
    p.add_argument("--dot", help="write the Hasse diagram to this path")
    sub.add_parser("exact", parents=[common], help="exact reference sets")
    p = sub.add_parser("alpha", parents=[common], help="alpha-cut approximation identities")
    p.add_argument("--set", help="comma-separated labels")
    p.add_argument("--alpha", help="degree in (0, 1], e.g. 0.5 or 1/2")
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.relation == "-":
            text = sys.stdin.read()
        else:
            with open(args.relation, encoding="utf-8") as fh:
                text = fh.read()
        relation, name = parse_document(text)
    except OSError as exc:
        print(f"fuzzyrough: cannot read {args.relation}: {exc.strerror}", file=stderr)
        return EXIT_INPUT
    except FuzzyRoughError as exc:
        print(f"fuzzyrough: {args.relation}: {exc}", file=stderr)
        return EXIT_INPUT

    t = TNorm.parse(args.tnorm)
    report = Report(args.command)
    if name:
        report["name"] = name
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            COMMANDS[args.command](relation, t, args, report)
    except (InputError, FuzzyRoughError, ValueError) as exc:
        print(f"fuzzyrough: {exc}", file=stderr)
        return EXIT_INPUT
    for w in caught:
        if str(w.message) not in report.warnings:
            report.warnings.append(str(w.message))
    for msg in report.warnings:
        print(f"fuzzyrough: warning: {msg}", file=stderr)
    stdout.write(report.render(args.format))
    return EXIT_OK if report.passed else EXIT_FALSIFIED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
