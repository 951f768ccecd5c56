"""Command-line front end.

Exit codes: 0 success, 1 domain failure (invalid complex or field,
non-gradient where a gradient field is required), 2 input error
(unreadable file, malformed JSON, unknown builtin, bad arguments).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import serialize
from .builtins import BUILTIN_NAMES, builtin
from .complexes import NonRegular, UnknownBuiltin
from .dot import export_dot
from .enumeration import (
    audit_against_claims,
    classify_fields,
    min_critical_count,
)
from .fields import (
    InvalidField,
    closed_v_path,
    critical_cells,
    gradient_field_of,
    is_discrete_morse,
    morse_function_from_field,
    v_paths,
)
from .symmetry import automorphisms, vertex_stabilizer_order

OK, DOMAIN_ERROR, INPUT_ERROR = 0, 1, 2

_DIM_WORD = {0: "vertex", 1: "edge", 2: "face"}


class CliError(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message
        super().__init__(message)


def _load_complex(source):
    if source.startswith("builtin:"):
        name = source[len("builtin:"):]
        try:
            return builtin(name)
        except UnknownBuiltin:
            raise CliError(INPUT_ERROR, f"unknown builtin {name!r}")
    try:
        with open(source) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(INPUT_ERROR, f"cannot read {source}: {exc}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(INPUT_ERROR, f"malformed JSON in {source}: {exc}")
    try:
        return serialize.complex_from_dict(data)
    except NonRegular as exc:
        raise CliError(
            DOMAIN_ERROR,
            "invalid complex:\n" + "\n".join(f"  {v}" for v in exc.violations))
    except (KeyError, TypeError) as exc:
        raise CliError(INPUT_ERROR, f"bad complex file {source}: {exc}")


def _load_field(K, path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(INPUT_ERROR, f"cannot read {path}: {exc}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(INPUT_ERROR, f"malformed JSON in {path}: {exc}")
    try:
        return serialize.field_from_dict(K, data)
    except InvalidField as exc:
        raise CliError(
            DOMAIN_ERROR,
            "invalid field:\n" + "\n".join(
                f"  {v['message']}" for v in exc.violations))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(INPUT_ERROR, f"bad field file {path}: {exc}")


def _emit(text, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cell_sort_key(K):
    return lambda c: (K.dim(c), K.label(c), c)


def cmd_list_builtins(args):
    lines = []
    for name in BUILTIN_NAMES:
        K = builtin(name)
        counts = "/".join(str(len(K.cells_of_dim(k))) for k in (0, 1, 2))
        lines.append(f"{name} {counts}")
    _emit("\n".join(lines) + "\n", args.output)
    return OK


def cmd_validate(args):
    try:
        K = _load_complex(args.complex)
    except CliError as exc:
        _emit(exc.message + "\n", args.output)
        return exc.code
    _emit(f"valid: {K.name} ({len(K)} cells)\n", args.output)
    return OK


def cmd_enumerate(args):
    K = _load_complex(args.complex)
    modulo = args.modulo_aut or args.audit
    if args.critical == "min":
        crit = min_critical_count(K)
    else:
        try:
            crit = int(args.critical)
        except ValueError:
            raise CliError(INPUT_ERROR, f"bad --critical value {args.critical!r}")
    report = classify_fields(K, crit, jobs=args.jobs) if modulo else None
    audit = audit_against_claims([report]) if args.audit else None

    if modulo:
        raw_count, class_count = report.raw_count, report.class_count
    else:
        from .enumeration import enumerate_gradient_fields
        raw_count = len(enumerate_gradient_fields(K, crit, jobs=args.jobs))
        class_count = None

    if args.format == "json":
        payload = report.to_dict() if modulo else {
            "complex": K.name, "critical_count": crit, "raw_count": raw_count}
        if audit is not None:
            payload["audit"] = audit
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerow(["complex", K.name])
        w.writerow(["critical_count", crit])
        w.writerow(["raw_count", raw_count])
        if class_count is not None:
            w.writerow(["class_count", class_count])
        if modulo:
            w.writerow([])
            w.writerow(["family", "classes"])
            for sig, cnt in sorted(report.family_partition.items()):
                w.writerow([sig, cnt])
        if audit is not None:
            w.writerow([])
            w.writerow(["complex", "claimed_value", "computed_value", "match"])
            for row in audit:
                w.writerow([row["complex"], row["claimed_value"],
                            row["computed_value"], str(row["match"]).lower()])
        text = buf.getvalue()
    else:
        lines = [f"complex: {K.name}", f"critical: {crit}",
                 f"fields: {raw_count}"]
        if class_count is not None:
            lines.append(f"classes: {class_count}")
            lines.append("families:")
            for sig, cnt in sorted(report.family_partition.items()):
                lines.append(f"  {sig or '(none)'}: {cnt}")
        if audit is not None:
            lines.append("audit:")
            for row in audit:
                lines.append(
                    f"  {row['complex']}: claimed={row['claimed_value']} "
                    f"computed={row['computed_value']} "
                    f"match={'yes' if row['match'] else 'no'}")
        text = "\n".join(lines) + "\n"

    if args.figures:
        if report is None:
            raise CliError(INPUT_ERROR, "--figures requires --modulo-aut")
        from .figures import save_family_partition_chart
        save_family_partition_chart(report, args.figures)
    _emit(text, args.output)
    return OK


def cmd_check_field(args):
    K = _load_complex(args.complex)
    try:
        V = _load_field(K, args.field)
    except CliError as exc:
        if exc.code == DOMAIN_ERROR:
            _emit("matching: invalid\n" + exc.message + "\n", args.output)
            return DOMAIN_ERROR
        raise
    lines = ["matching: valid"]
    cycle = closed_v_path(K, V)
    if cycle is None:
        lines.append("gradient: yes")
    else:
        lines.append("gradient: no")
        lines.append("cycle: " + " ".join(K.label(c) for c in cycle))
    crit = critical_cells(K, V)
    if len(crit) == len(K):
        lines.append(f"critical: all {len(K)} cells")
    else:
        parts = [
            f"{_DIM_WORD[K.dim(c)]} {K.label(c)} (index {K.dim(c)})"
            for c in sorted(crit, key=_cell_sort_key(K))]
        lines.append("critical: " + ", ".join(parts))
    if cycle is None:
        alt = sum((-1) ** K.dim(c) for c in crit)
        chi = K.euler_characteristic()
        lines.append(
            f"euler: {alt} {'=' if alt == chi else '!='} {chi} "
            f"({'ok' if alt == chi else 'MISMATCH'})")
    _emit("\n".join(lines) + "\n", args.output)
    return OK if cycle is None else DOMAIN_ERROR


def cmd_export_dot(args):
    K = _load_complex(args.complex)
    V = _load_field(K, args.field) if args.field else None
    _emit(export_dot(K, V), args.output)
    return OK


def cmd_morse(args):
    K = _load_complex(args.complex)
    V = _load_field(K, args.field)
    if closed_v_path(K, V) is not None:
        _emit("not a gradient field\n", args.output)
        return DOMAIN_ERROR
    f = morse_function_from_field(K, V)
    # round trip before printing anything
    assert is_discrete_morse(K, f)
    assert gradient_field_of(K, f) == V
    if args.format == "json":
        text = serialize.morse_function_to_json(K, f)
    else:
        lines = []
        for c in sorted(range(len(K)), key=_cell_sort_key(K)):
            v = f[c]
            lines.append(f"{K.label(c)} = {v.numerator}/{v.denominator}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return OK


def cmd_aut(args):
    K = _load_complex(args.complex)
    group = automorphisms(K)
    cycle_types = {}
    for g in group:
        key = ",".join(str(n) for n in g.cycle_type())
        cycle_types[key] = cycle_types.get(key, 0) + 1
    stabs = {
        K.label(v): vertex_stabilizer_order(K, group, v)
        for v in K.cells_of_dim(0)}
    if args.format == "json":
        payload = {
            "complex": K.name,
            "order": len(group),
            "cycle_types": dict(sorted(cycle_types.items())),
            "vertex_stabilizers": dict(sorted(stabs.items())),
        }
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"complex: {K.name}", f"order: {len(group)}", "cycle types:"]
        for key, cnt in sorted(cycle_types.items()):
            lines.append(f"  ({key}): {cnt}")
        lines.append("vertex stabilizers:")
        for label, order in sorted(stabs.items()):
            lines.append(f"  {label}: {order}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return OK


def cmd_paths(args):
    K = _load_complex(args.complex)
    V = _load_field(K, args.field)
    try:
        start = K.by_label(args.start).id
        end = K.by_label(args.end).id
    except KeyError as exc:
        raise CliError(INPUT_ERROR, str(exc))
    paths = v_paths(K, V, start, end, max_len=args.max_len)
    lines = [f"paths: {len(paths)}"]
    for p in paths:
        lines.append("  " + " ".join(K.label(c) for c in p))
    _emit("\n".join(lines) + "\n", args.output)
    return OK


def _add_common(sub, complex_required=True, field=None, formats=("text", "json")):
    sub.add_argument("--complex", required=complex_required,
                     help="builtin:NAME or path to a complex JSON file")
    if field is not None:
        sub.add_argument("--field", required=field == "required",
                         help="path to a field JSON file")
    sub.add_argument("--format", choices=formats, default=formats[0])
    sub.add_argument("--output", help="write output to this path instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cwmorse",
        description="Discrete Morse vector fields on surface CW complexes")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("list-builtins", help="names and cell counts of the builtins")
    s.add_argument("--output")
    s.set_defaults(func=cmd_list_builtins)

    s = subs.add_parser("validate", help="check a complex file or builtin")
    _add_common(s)
    s.set_defaults(func=cmd_validate)

    s = subs.add_parser("enumerate", help="enumerate gradient fields")
    _add_common(s, formats=("text", "json", "csv"))
    s.add_argument("--modulo-aut", action="store_true",
                   help="classify up to complex automorphism")
    s.add_argument("--critical", default="min",
                   help="number of critical cells, or 'min' (default)")
    s.add_argument("--audit", action="store_true",
                   help="append the published-claim audit ledger")
    s.add_argument("--jobs", type=int, default=1,
                   help="worker threads for the search")
    s.add_argument("--figures",
                   help="also render the family-partition chart to this file")
    s.set_defaults(func=cmd_enumerate)

    s = subs.add_parser("check-field", help="validate a field against a complex")
    _add_common(s, field="required")
    s.set_defaults(func=cmd_check_field)

    s = subs.add_parser("export-dot", help="Hasse diagram as DOT, field arrows highlighted")
    _add_common(s, field="optional", formats=("dot",))
    s.set_defaults(func=cmd_export_dot)

    s = subs.add_parser("morse", help="emit a Morse function realizing a field")
    _add_common(s, field="required")
    s.set_defaults(func=cmd_morse)

    s = subs.add_parser("aut", help="automorphism group summary")
    _add_common(s)
    s.set_defaults(func=cmd_aut)

    s = subs.add_parser("paths", help="list V-paths between two cells")
    _add_common(s, field="required")
    s.add_argument("--from", dest="start", required=True, help="start cell label")
    s.add_argument("--to", dest="end", required=True, help="end cell label")
    s.add_argument("--max-len", type=int, default=None,
                   help="step cutoff for non-gradient fields")
    s.set_defaults(func=cmd_paths)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except NonRegular as exc:
        print("invalid complex:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
