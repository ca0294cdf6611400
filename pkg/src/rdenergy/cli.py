"""Command-line front end.

Exit status: 0 on success, 2 on invalid input, 3 when ``verify`` finds a
failing criterion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import acceptance
from .closed_forms import multipartite_block_spec, multipartite_energy
from .eigen import energy_report
from .errors import RDEnergyError
from .extremal import edge_deletion_sweep, scan
from .graphs import Graph, PartitionSpec, complete_multipartite, read_edge_list
from .matrices import MatrixKind, dense_spectrum
from .quotient import assemble_spectrum

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3

CSV_COLUMNS = {
    "spectrum": ["index", "eigenvalue"],
    "energy": ["matrix", "n", "energy", "method", "spectral_radius", "negative_sum",
               "n_pos", "n_zero", "n_neg"],
    "scan": ["parts", "rd_energy", "is_min", "is_max"],
    "sweep": ["params", "energy_before", "energy_after", "delta", "sign",
              "dense_before", "dense_after"],
    "verify": ["criterion", "name", "passed", "detail"],
}

EPILOG = "CSV columns (header row always written):\n" + "\n".join(
    f"  {cmd}: {','.join(cols)}" for cmd, cols in CSV_COLUMNS.items())


def fmt_float(x: float) -> float:
    """Round to 12 significant digits."""
    return float(f"{x:.12g}")


def _canonical(obj: Any) -> Any:
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    return obj


def dumps_json(obj: Any) -> str:
    return json.dumps(_canonical(obj), sort_keys=True, indent=2)


def _load_graph(args) -> tuple[Graph, PartitionSpec | None]:
    if args.parts is not None:
        spec = PartitionSpec.parse(args.parts)
        return complete_multipartite(spec), spec
    return read_edge_list(args.edges), None


# -- commands: each returns (report dict, csv rows) ------------------------------

def cmd_spectrum(args):
    g, spec = _load_graph(args)
    kind = MatrixKind(args.matrix)
    if spec is not None:
        s, method = assemble_spectrum(multipartite_block_spec(spec, kind)), "quotient"
    else:
        s, method = dense_spectrum(g, kind), "dense"
    rep = energy_report(s, method, args.tol)
    report = {"matrix": kind.value, "n": g.n, "method": method,
              "eigenvalues": s.eigenvalues.tolist(), "inertia": list(rep.inertia)}
    rows = [[i + 1, fmt_float(v)] for i, v in enumerate(s.eigenvalues)]
    return report, rows


def cmd_energy(args):
    g, spec = _load_graph(args)
    kind = MatrixKind(args.matrix)
    if spec is not None:
        value_rep = multipartite_energy(spec, kind)
        s = assemble_spectrum(multipartite_block_spec(spec, kind))
    else:
        s = dense_spectrum(g, kind)
        value_rep = energy_report(s, "dense")
    rep = energy_report(s, value_rep.method, args.tol)
    report = {"matrix": kind.value, "n": g.n, "energy": value_rep.energy,
              "method": value_rep.method.value, "spectral_radius": rep.spectral_radius,
              "negative_sum": rep.negative_sum, "inertia": list(rep.inertia)}
    if spec is not None:
        report["parts"] = list(spec.parts)
    row = [kind.value, g.n, fmt_float(value_rep.energy), value_rep.method.value,
           fmt_float(rep.spectral_radius), fmt_float(rep.negative_sum), *rep.inertia]
    return report, [row]


def cmd_scan(args):
    rep = scan(args.n, args.k)
    rows = [[str(spec), fmt_float(e), spec == rep.argmin, spec == rep.argmax]
            for spec, e in rep.rows]
    report = {
        "n": rep.n, "k": rep.k,
        "rows": [{"parts": list(spec.parts), "rd_energy": e} for spec, e in rep.rows],
        "argmin": list(rep.argmin.parts), "argmax": list(rep.argmax.parts),
        "verified": {"min_is_complete_split": rep.verified[0], "max_is_turan": rep.verified[1]},
        "ties": list(rep.ties),
    }
    return report, rows


def cmd_sweep(args):
    rep = edge_deletion_sweep(args.family, args.lo, args.hi)
    rows = [[",".join(map(str, r.params)), fmt_float(r.energy_before), fmt_float(r.energy_after),
             fmt_float(r.delta), r.sign, fmt_float(r.dense_before), fmt_float(r.dense_after)]
            for r in rep.rows]
    report = {
        "family": rep.family.value, "range": list(rep.param_range),
        "max_path_disagreement": rep.max_disagreement,
        "rows": [{"params": list(r.params), "energy_before": r.energy_before,
                  "energy_after": r.energy_after, "delta": r.delta, "sign": r.sign,
                  "dense_before": r.dense_before, "dense_after": r.dense_after}
                 for r in rep.rows],
    }
    return report, rows


def cmd_verify(args):
    results = acceptance.run_all()
    for r in results:
        print(r.line(), file=sys.stderr)
    report = {"passed": all(r.passed for r in results),
              "criteria": [{"criterion": r.number, "name": r.name, "passed": r.passed,
                            "detail": r.detail} for r in results]}
    rows = [[r.number, r.name, r.passed, r.detail] for r in results]
    return report, rows


COMMANDS = {"spectrum": cmd_spectrum, "energy": cmd_energy, "scan": cmd_scan,
            "sweep": cmd_sweep, "verify": cmd_verify}


def render(command: str, report: dict, rows: list, fmt: str) -> str:
    if fmt == "json":
        return dumps_json(report)
    header = CSV_COLUMNS[command]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdenergy", description=__doc__.splitlines()[0],
        epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=False):
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")
        p.add_argument("--tol", type=float, default=None,
                       help="zero tolerance for inertia and negative sums")
        if graph:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--parts", help="part sizes of a complete multipartite graph, e.g. 3,2,2")
            src.add_argument("--edges", help="edge-list file, one 0-indexed 'u v' pair per line")
            p.add_argument("--matrix", choices=[k.value for k in MatrixKind], default="rd")

    for name, text in [("spectrum", "eigenvalues of a graph matrix"),
                       ("energy", "energy of a graph matrix")]:
        common(sub.add_parser(name, help=text, epilog=EPILOG,
                              formatter_class=argparse.RawDescriptionHelpFormatter), graph=True)

    p = sub.add_parser("scan", help="RD energy of every complete k-partite graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("sweep", help="RD energy change under deletion of one edge")
    p.add_argument("--family", choices=["kqq", "kmn", "kpqr"], required=True)
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    common(p)

    common(sub.add_parser("verify", help="run the acceptance checks"))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, rows = COMMANDS[args.command](args)
    except (RDEnergyError, OSError, ValueError) as exc:
        print(f"rdenergy: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render(args.command, report, rows, args.format))
    if args.command == "verify" and not report["passed"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
