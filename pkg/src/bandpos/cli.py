"""Command-line interface.

Subcommands: check-positivity, hadamard, chain, critical-exponent,
id-check, counterexample, probe.  Exit codes encode pipeline success, not
mathematical verdicts: 0 means the analysis completed (whatever the
verdict), 1 is a usage error, 2 an input format error.  Setting
BANDPOS_EXACT=1 switches chain sequences and principal minors to exact
rational arithmetic where the inputs allow it.

All floating-point output is printed to 12 significant digits so that
reports are byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import __version__
from .bandmat import (
    BandSymMatrix,
    hadamard_power,
    matrix_from_json,
    matrix_to_json_obj,
)
from .chainseq import minimal_parameters, tridiag_ratio_sequence, wall_wetzel_pd
from .graphs import graph_from_text, is_chordal, max_near_clique
from .positivity import (
    DEFAULT_TOL,
    PD,
    classify_positivity,
    determinant,
    leading_principal_minors,
)
from .preservers import (
    PowerSet,
    _consecutive_nonzero,
    counterexample_pentadiagonal,
    counterexample_tridiagonal,
    id_blocks,
    id_numeric_probe,
    is_id_pentadiagonal,
    is_id_tridiagonal,
    probe_preserves,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2

CONVENTION_ZERO_POWER = "0^0 := 1 (zero entries map to 1 at exponent 0)"
CONVENTION_NATURALS = "naturals in power sets exclude 0"
CONVENTION_PROBE = "numeric probe is a necessary condition, not a certificate"
CONVENTION_BOUNDARY = "minimal parameter within 1e-12 of 1: verdict is boundary-indeterminate"


class UsageError(Exception):
    pass


class InputFormatError(Exception):
    pass


@dataclass
class RunReport:
    """Structured result of one CLI invocation."""

    command: str
    inputs: dict
    verdicts: dict
    conventions: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "inputs": _json_ready(self.inputs),
            "verdicts": _json_ready(self.verdicts),
            "conventions": list(self.conventions),
            "exit_code": self.exit_code,
        }
        return json.dumps(obj, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for key, val in self.inputs.items():
            lines.append(f"input.{key}: {_fmt_value(val)}")
        for key, val in self.verdicts.items():
            lines.append(f"{key}: {_fmt_value(val)}")
        conv = "; ".join(self.conventions) if self.conventions else "none"
        lines.append(f"conventions: {conv}")
        return "\n".join(lines)


def _round12(x: float) -> float:
    return float(f"{float(x):.12g}")


def _json_ready(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (np.floating, float)):
        return _round12(float(value))
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.ndarray):
        return _json_ready(value.tolist())
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    return value


def _fmt_value(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (np.floating, float)):
        return f"{float(value):.12g}"
    if isinstance(value, (np.integer, int)):
        return str(int(value))
    if isinstance(value, Fraction):
        return str(value)
    if value is None:
        return "none"
    if isinstance(value, np.ndarray):
        return _fmt_value(value.tolist())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return json.dumps(_json_ready(value), ensure_ascii=False)
    return str(value)


def _exact_enabled() -> bool:
    return os.environ.get("BANDPOS_EXACT") == "1"


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _load_matrix(path: str):
    text = _read_file(path)
    try:
        return matrix_from_json(text)
    except ValueError as exc:
        raise InputFormatError(f"{path}: {exc}") from exc


def _load_graph(path: str):
    text = _read_file(path)
    try:
        return graph_from_text(text)
    except ValueError as exc:
        raise InputFormatError(f"{path}: {exc}") from exc


def _exact_json_obj(path: str):
    """Re-parse a matrix file with all numbers as exact Fractions."""
    text = _read_file(path)
    try:
        return json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: invalid JSON: {exc}") from exc


def _exact_dense_rows(obj) -> list[list[Fraction]] | None:
    kind = obj.get("kind")
    if kind == "dense":
        return [[Fraction(x) for x in row] for row in obj["rows"]]
    if kind == "tridiagonal":
        diag = [Fraction(x) for x in obj["diag"]]
        off = [Fraction(x) for x in obj["offdiag"]]
        n = len(diag)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i in range(n - 1):
            rows[i][i + 1] = rows[i + 1][i] = off[i]
        return rows
    if kind == "pentadiagonal":
        diag = [Fraction(x) for x in obj["diag"]]
        second = [Fraction(x) for x in obj["second"]]
        n = len(diag)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i in range(n - 2):
            rows[i][i + 2] = rows[i + 2][i] = second[i]
        return rows
    return None


def _matrix_kind(m) -> str:
    return matrix_to_json_obj(m)["kind"]


def _cmd_check_positivity(args) -> RunReport:
    m = _load_matrix(args.file)
    verdict = classify_positivity(m, args.tol)
    inputs = {
        "file": args.file,
        "kind": _matrix_kind(m),
        "order": m.order if hasattr(m, "order") else m.shape[0],
        "tol": args.tol,
    }
    verdicts = {
        "classification": verdict.classification,
        "min_eigenvalue": verdict.min_eigenvalue,
        "scale": verdict.scale,
        "leading_minors": list(verdict.certificate),
    }
    conventions: list[str] = []
    exact = _exact_enabled()
    if exact:
        rows = _exact_dense_rows(_exact_json_obj(args.file))
        if rows is not None:
            verdicts["leading_minors_exact"] = leading_principal_minors(rows)
    if isinstance(m, BandSymMatrix) and m.bandwidth == 1:
        if (m.main_diag > 0).all():
            if exact:
                obj = _exact_json_obj(args.file)
                diag = [Fraction(x) for x in obj["diag"]]
                off = [Fraction(x) for x in obj["offdiag"]]
                ratios = [off[j] ** 2 / (diag[j] * diag[j + 1]) for j in range(len(off))]
            else:
                ratios = list(tridiag_ratio_sequence(m))
            report = minimal_parameters(ratios) if ratios else None
            verdicts["ratio_sequence"] = ratios
            if report is not None:
                verdicts["chain_is_chain"] = report.is_chain
                verdicts["chain_minimal_params"] = list(report.minimal_params)
                verdicts["chain_failure_index"] = report.failure_index
                if report.boundary_indeterminate:
                    conventions.append(CONVENTION_BOUNDARY)
        else:
            verdicts["ratio_sequence"] = "inapplicable (nonpositive diagonal entry)"
        ww = wall_wetzel_pd(m)
        verdicts["wall_wetzel_pd"] = ww
        oracle_pd = verdict.classification == PD
        if ww == oracle_pd:
            verdicts["oracle_agreement"] = "yes"
        elif abs(verdict.min_eigenvalue) <= 10 * args.tol * max(1.0, verdict.scale):
            verdicts["oracle_agreement"] = "within tolerance band"
        else:
            verdicts["oracle_agreement"] = "DISAGREEMENT"
    return RunReport("check-positivity", inputs, verdicts, conventions)


def _cmd_hadamard(args) -> RunReport:
    if args.r < 0:
        raise UsageError("exponent must be nonnegative")
    m = _load_matrix(args.file)
    try:
        powered = hadamard_power(m, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    verdict = classify_positivity(powered, args.tol)
    inputs = {"file": args.file, "kind": _matrix_kind(m), "r": args.r, "tol": args.tol}
    verdicts = {
        "classification": verdict.classification,
        "min_eigenvalue": verdict.min_eigenvalue,
        "determinant": determinant(powered),
        "matrix": matrix_to_json_obj(powered),
    }
    conventions = [CONVENTION_ZERO_POWER] if args.r == 0 else []
    return RunReport("hadamard", inputs, verdicts, conventions)


def _parse_sequence(text: str) -> list:
    tokens = [tok.strip() for tok in text.split(",")]
    if not tokens or any(not tok for tok in tokens):
        raise InputFormatError("empty entry in sequence")
    exact = _exact_enabled()
    values = []
    for tok in tokens:
        try:
            if "/" in tok:
                values.append(Fraction(tok))
            elif exact:
                values.append(Fraction(tok))
            else:
                values.append(float(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"cannot parse sequence entry {tok!r}") from exc
    return values


def _cmd_chain(args) -> RunReport:
    values = _parse_sequence(args.sequence)
    report = minimal_parameters(values)
    inputs = {"sequence": values}
    verdicts = {
        "is_chain": report.is_chain,
        "minimal_params": list(report.minimal_params),
        "failure_index": report.failure_index,
        "exact_mode": report.exact_mode,
        "boundary_indeterminate": report.boundary_indeterminate,
    }
    conventions = [CONVENTION_BOUNDARY] if report.boundary_indeterminate else []
    return RunReport("chain", inputs, verdicts, conventions)


def _cmd_critical_exponent(args) -> RunReport:
    g = _load_graph(args.file)
    cert = is_chordal(g)
    inputs = {"file": args.file, "vertices": g.n, "edges": g.edge_count}
    if not cert.is_chordal:
        verdicts = {
            "chordal": False,
            "witness_cycle": "-".join(str(v) for v in cert.witness_cycle),
        }
        return RunReport("critical-exponent", inputs, verdicts)
    if g.n < 3:
        raise UsageError("critical exponent needs at least 3 vertices")
    r = max_near_clique(g)
    power_set = PowerSet(float(r - 2), includes_naturals=True)
    verdicts = {
        "chordal": True,
        "elimination_ordering": list(cert.ordering),
        "max_near_clique": r,
        "critical_exponent_set": power_set.render(),
        "tail_threshold": power_set.tail_threshold,
        "includes_naturals": power_set.includes_naturals,
    }
    return RunReport("critical-exponent", inputs, verdicts, [CONVENTION_NATURALS])


def _cmd_id_check(args) -> RunReport:
    m = _load_matrix(args.file)
    inputs = {"file": args.file, "kind": _matrix_kind(m)}
    conventions: list[str] = []
    if isinstance(m, BandSymMatrix):
        try:
            if m.bandwidth == 1:
                verdict = is_id_tridiagonal(m)
                bad = _consecutive_nonzero(m.off_diags[0], 1e-12)
                bad_reason = (
                    f"not ID: off-diagonal entries {bad} and {bad + 1} are both nonzero"
                    if bad is not None
                    else None
                )
            else:
                verdict = is_id_pentadiagonal(m)
                from .bandmat import split_pentadiagonal

                bad_reason = None
                for parity, block in zip(("odd", "even"), split_pentadiagonal(m)):
                    if _consecutive_nonzero(block.off_diags[0], 1e-12) is not None:
                        bad_reason = (
                            "not ID: consecutive nonzero entries in the "
                            f"{parity}-position second-diagonal subsequence"
                        )
                        break
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        verdicts = {"infinitely_divisible": verdict}
        if verdict:
            verdicts["reason"] = "PSD with no two consecutive nonzero off-diagonal entries"
            if m.bandwidth == 1:
                verdicts["block_orders"] = [b.order for b in id_blocks(m)]
        elif bad_reason is not None:
            verdicts["reason"] = bad_reason
        else:
            verdicts["reason"] = "not ID: matrix is not PSD"
    else:
        try:
            passed = id_numeric_probe(m)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        verdicts = {"probe_passed": passed}
        conventions.append(CONVENTION_PROBE)
    return RunReport("id-check", inputs, verdicts, conventions)


def _cmd_counterexample(args) -> RunReport:
    try:
        if args.family == "tridiagonal":
            m = counterexample_tridiagonal(args.r)
            eps = float(m.main_diag[1]) - 2.0
            det_formula = (2.0 + eps) ** args.r - 2.0
        else:
            m = counterexample_pentadiagonal(args.r)
            eps = None
            det_formula = 2.0 - 3.0 * 2.0**args.r + 4.0**args.r
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    powered = hadamard_power(m, args.r)
    verdict = classify_positivity(powered, args.tol)
    inputs = {"family": args.family, "r": args.r}
    verdicts = {
        "matrix": matrix_to_json_obj(m),
        "det_formula": det_formula,
        "det_computed": determinant(powered),
        "powered_classification": verdict.classification,
    }
    if eps is not None:
        verdicts["epsilon"] = eps
    return RunReport("counterexample", inputs, verdicts)


def _cmd_probe(args) -> RunReport:
    graph = _load_graph(args.graph) if args.graph else None
    try:
        report = probe_preserves(
            args.family, args.r, args.n, args.seed, tol=args.tol, graph=graph
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    inputs = {"family": args.family, "r": args.r, "samples": args.n, "seed": args.seed}
    verdicts = {
        "probe_report": report.to_json_obj(),
        "falsified": bool(report.min_over_samples < -args.tol),
    }
    return RunReport("probe", inputs, verdicts)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bandpos", description=__doc__)
    parser.add_argument("--version", action="version", version=f"bandpos {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="classification tolerance")
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        return p

    p = add("check-positivity", _cmd_check_positivity, help="classify PD/PSD/indefinite")
    p.add_argument("file", help="matrix JSON file")

    p = add("hadamard", _cmd_hadamard, help="entrywise power plus classification")
    p.add_argument("file", help="matrix JSON file")
    p.add_argument("-r", type=float, required=True, help="exponent")

    p = add("chain", _cmd_chain, help="chain-sequence test of a sequence")
    p.add_argument("sequence", help="comma-separated decimals or fractions")

    p = add("critical-exponent", _cmd_critical_exponent, help="chordal critical exponent")
    p.add_argument("file", help="graph file")

    p = add("id-check", _cmd_id_check, help="infinite divisibility check")
    p.add_argument("file", help="matrix JSON file")

    p = add("counterexample", _cmd_counterexample, help="falsifying matrix for r < 1")
    p.add_argument("--family", choices=["tridiagonal", "pentadiagonal"], required=True)
    p.add_argument("-r", type=float, required=True, help="exponent in (0, 1)")

    p = add("probe", _cmd_probe, help="seeded random falsification probe")
    p.add_argument("--family", choices=["tridiagonal", "pentadiagonal", "graph"], required=True)
    p.add_argument("-r", type=float, required=True, help="exponent > 0")
    p.add_argument("-n", type=int, default=100, help="number of samples")
    p.add_argument("--seed", type=int, default=0, help="probe seed")
    p.add_argument("--graph", help="graph file for the graph family")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    print(report.to_json() if args.json else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
