"""Command-line front end.

Matrix files (``.qmat``) are plain text: a header line ``m n``, then m
lines of n whitespace-separated quaternion literals; lines starting with
``%`` are comments.  The scalar mode is inferred per file: any decimal
literal makes it a float file, any ``p/q`` fraction makes it exact, and
mixing the two is an error.  Matrices are printed back in the same
grammar, so outputs are re-ingestible; with ``--check`` the appended
report lines are ``%``-prefixed to keep the output a valid matrix file.

Exit codes: 0 success, 1 usage or parse error, 2 computation refusal
(size guard, mode/shape/precondition violations, singular input), and
3 verification failure (a defining equation fails or routes disagree).
"""

import argparse
import os
import re
import sys

from . import geninv, ncdet, verify
from .errors import (
    EnumerationGuardError,
    ModeError,
    ParseError,
    PreconditionError,
    QdetError,
    RouteDisagreementError,
    ShapeError,
    SingularError,
)
from .matrix import QMatrix, index_of, max_abs_diff, rank
from .scalar import EXACT, FLOAT, Quaternion, format_quaternion, literal_mode, parse_quaternion

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUSED = 2
EXIT_VERIFY = 3

GUARD_ENV_VAR = "QDET_MAX_N"


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Matrix file format
# ---------------------------------------------------------------------------


def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("%"):
            continue
        yield lineno, raw


def parse_qmat(text: str) -> QMatrix:
    """Parse matrix file text; raises `ParseError` with line/column info."""
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    header_line, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError("header must be 'rows cols'", line=header_line)
    try:
        m, n = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError("header must contain two integers", line=header_line) from None
    if m < 1 or n < 1:
        raise ParseError("dimensions must be positive", line=header_line)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} data rows, found {len(body)}")

    tokens = []  # (lineno, col, text)
    for rowno, (lineno, raw) in enumerate(body, start=1):
        row = [(lineno, t.start() + 1, t.group()) for t in re.finditer(r"\S+", raw)]
        if len(row) != n:
            raise ParseError(f"row {rowno} has {len(row)} entries, expected {n}", line=lineno)
        tokens.append(row)

    mode = None
    for row in tokens:
        for lineno, col, text_ in row:
            try:
                this = literal_mode(text_)
            except ParseError as exc:
                raise ParseError(str(exc), line=lineno, col=col) from None
            if this is None:
                continue
            if mode is not None and mode != this:
                raise ParseError(
                    f"mixed-mode literals: file already {mode}, {text_!r} is {this}",
                    line=lineno,
                    col=col,
                )
            mode = this
    mode = mode or EXACT

    rows = []
    for row in tokens:
        out = []
        for lineno, col, text_ in row:
            try:
                out.append(parse_quaternion(text_, mode))
            except ParseError as exc:
                raise ParseError(str(exc), line=lineno, col=col) from None
        rows.append(out)
    return QMatrix(rows)


def format_qmat(a: QMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    for i in range(a.rows):
        lines.append(" ".join(format_quaternion(q) for q in a.row(i)))
    return "\n".join(lines) + "\n"


def _kv_matrix_lines(a: QMatrix):
    lines = [f"rows = {a.rows}", f"cols = {a.cols}", f"mode = {a.mode}"]
    for i in range(a.rows):
        for j in range(a.cols):
            lines.append(f"entry.{i + 1}.{j + 1} = {format_quaternion(a[i, j])}")
    return lines


def _emit_matrix(a: QMatrix, args):
    if args.emit == "kv":
        print("\n".join(_kv_matrix_lines(a)))
    else:
        print(format_qmat(a), end="")


def _emit_report(report, args):
    if args.emit == "kv":
        for key, value in report.kv_items():
            print(f"{key} = {value}")
    else:
        for line in report.human().splitlines():
            print(f"% {line}")


def _emit_scalar(value, mode, args):
    literal = format_quaternion(value if isinstance(value, Quaternion) else Quaternion.real(value, mode))
    if args.emit == "kv":
        print(f"value = {literal}")
    else:
        print(literal)


# ---------------------------------------------------------------------------
# Argument handling
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_common(sub, weight=False):
    sub.add_argument("--input", "-i", required=True, help="matrix file (qmat format)")
    if weight:
        sub.add_argument("--weight", required=True, help="weight matrix file")
    sub.add_argument("--mode", choices=(EXACT, FLOAT), help="force scalar mode")
    sub.add_argument("--max-n", type=int, help=f"enumeration guard override (or ${GUARD_ENV_VAR})")
    sub.add_argument("--emit", choices=("human", "kv"), default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qdet", description="quaternion determinants and generalized inverses")
    subs = parser.add_subparsers(dest="command", required=True)

    det = subs.add_parser("det", help="row/column determinant")
    _add_common(det)
    det.add_argument("--anchor", help="r:<row> or c:<col> (1-based); omit for ddet of a Hermitian input")

    mp = subs.add_parser("mp", help="Moore-Penrose inverse")
    _add_common(mp)
    mp.add_argument("--route", default="cdet", help="cdet | rdet | all")
    mp.add_argument("--check", action="store_true", help="verify the defining equations")

    dr = subs.add_parser("drazin", help="Drazin inverse")
    _add_common(dr)
    dr.add_argument("--route", default="cdet", help="|".join(geninv.DRAZIN_ROUTES) + " | all")
    dr.add_argument("--check", action="store_true")

    wd = subs.add_parser("wdrazin", help="weighted Drazin inverse")
    _add_common(wd, weight=True)
    wd.add_argument("--route", default="via_drazin_U", help="|".join(geninv.WDRAZIN_ROUTES) + " | all")
    wd.add_argument("--check", action="store_true")
    wd.add_argument(
        "--lambda",
        dest="lam",
        type=float,
        help="also print both limit-representation estimates at this shift (float)",
    )

    ver = subs.add_parser("verify", help="check a candidate inverse against the defining equations")
    _add_common(ver)
    ver.add_argument("--candidate", required=True, help="candidate matrix file")
    ver.add_argument("--kind", required=True, choices=("mp", "drazin", "wdrazin"))
    ver.add_argument("--weight", help="weight matrix file (wdrazin only)")

    info = subs.add_parser("info", help="dimensions, rank, index, Hermitian flags")
    _add_common(info)
    info.add_argument("--weight", help="optional weight matrix file")

    return parser


def _load(path, mode_override):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None
    a = parse_qmat(text)
    if mode_override == FLOAT:
        return a.to_float()
    if mode_override == EXACT and a.mode == FLOAT:
        raise _UsageError("cannot reinterpret a float file in exact mode")
    return a


def _resolve_guard(args):
    """Apply --max-n / $QDET_MAX_N; returns the previous guard (or None)."""
    limit = args.max_n
    if limit is None:
        env = os.environ.get(GUARD_ENV_VAR)
        if env:
            try:
                limit = int(env)
            except ValueError:
                raise _UsageError(f"${GUARD_ENV_VAR} must be an integer, got {env!r}") from None
    if limit is None:
        return None
    return ncdet.set_enumeration_guard(limit)


def _parse_anchor(text):
    m = re.fullmatch(r"([rc]):(\d+)", text or "")
    if not m:
        raise _UsageError(f"anchor must look like r:2 or c:1, got {text!r}")
    return m.group(1), int(m.group(2))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_det(args):
    a = _load(args.input, args.mode)
    if args.anchor:
        which, idx = _parse_anchor(args.anchor)
        value = ncdet.rdet(idx, a) if which == "r" else ncdet.cdet(idx, a)
        _emit_scalar(value, a.mode, args)
        return EXIT_OK
    if not a.is_hermitian():
        raise _UsageError("--anchor is required for non-Hermitian input")
    _emit_scalar(ncdet.ddet(a), a.mode, args)
    return EXIT_OK


def _run_routed(args, all_routes, one_route, checker):
    if args.route == "all":
        results = all_routes()
        geninv.assert_routes_agree(results, list(results.values())[0].mode, args.command)
        x = next(iter(results.values()))
        provenance = "all:" + ",".join(results)
    else:
        x = one_route(args.route)
        provenance = args.route
    _emit_matrix(x, args)
    if args.check:
        report = checker(x, provenance)
        _emit_report(report, args)
        if not report.ok:
            return EXIT_VERIFY
    return EXIT_OK


def _cmd_mp(args):
    a = _load(args.input, args.mode)
    return _run_routed(
        args,
        lambda: geninv.mp_all_routes(a),
        lambda route: geninv.mp_inverse(a, route),
        lambda x, prov: verify.check_penrose(a, x, provenance=prov),
    )


def _cmd_drazin(args):
    a = _load(args.input, args.mode)
    return _run_routed(
        args,
        lambda: geninv.drazin_all_routes(a),
        lambda route: geninv.drazin(a, route),
        lambda x, prov: verify.check_drazin(a, x, provenance=prov),
    )


def _cmd_wdrazin(args):
    a = _load(args.input, args.mode)
    w = _load(args.weight, args.mode)
    code = _run_routed(
        args,
        lambda: geninv.wdrazin_all_routes(a, w),
        lambda route: geninv.wdrazin(a, w, route),
        lambda x, prov: verify.check_wdrazin(a, w, x, provenance=prov),
    )
    if args.lam is not None:
        af, wf = a.to_float(), w.to_float()
        est = geninv.wdrazin_limit_estimate(af, wf, args.lam)
        route = args.route if args.route != "all" else "via_drazin_U"
        exact = geninv.wdrazin(a, w, route).to_float()
        for name, mat in (("limit.via_aw", est.via_aw), ("limit.via_wa", est.via_wa)):
            dev = max_abs_diff(mat, exact)
            if args.emit == "kv":
                print(f"{name}.deviation = {dev!r}")
                for line in _kv_matrix_lines(mat):
                    print(f"{name}.{line}")
            else:
                print(f"% {name} at lambda={args.lam} (max deviation {dev:.3e}):")
                for line in format_qmat(mat).splitlines():
                    print(f"% {line}")
    return code


def _cmd_verify(args):
    a = _load(args.input, args.mode)
    x = _load(args.candidate, args.mode)
    if args.kind == "wdrazin":
        if not args.weight:
            raise _UsageError("--weight is required for --kind wdrazin")
        w = _load(args.weight, args.mode)
        report = verify.check_wdrazin(a, w, x, provenance="candidate")
    elif args.kind == "drazin":
        report = verify.check_drazin(a, x, provenance="candidate")
    else:
        report = verify.check_penrose(a, x, provenance="candidate")
    if args.emit == "kv":
        for key, value in report.kv_items():
            print(f"{key} = {value}")
    else:
        print(report.human())
    return EXIT_OK if report.ok else EXIT_VERIFY


def _describe(name, a):
    lines = [
        f"{name}.rows = {a.rows}",
        f"{name}.cols = {a.cols}",
        f"{name}.mode = {a.mode}",
        f"{name}.rank = {rank(a)}",
        f"{name}.hermitian = {'true' if a.is_hermitian() else 'false'}",
    ]
    if a.is_square():
        lines.append(f"{name}.index = {index_of(a)}")
    return lines


def _cmd_info(args):
    a = _load(args.input, args.mode)
    lines = _describe("A", a)
    if args.weight:
        w = _load(args.weight, args.mode)
        if w.rows != a.cols or w.cols != a.rows:
            raise ShapeError(
                f"weight must be {a.cols}x{a.rows} for a {a.rows}x{a.cols} input"
            )
        lines += _describe("W", w)
        u = w @ a
        v = a @ w
        lines += _describe("WA", u)
        lines += _describe("AW", v)
        lines.append(f"k = {max(index_of(u), index_of(v))}")
    print("\n".join(lines))
    return EXIT_OK


_COMMANDS = {
    "det": _cmd_det,
    "mp": _cmd_mp,
    "drazin": _cmd_drazin,
    "wdrazin": _cmd_wdrazin,
    "verify": _cmd_verify,
    "info": _cmd_info,
}


def main(argv=None) -> int:
    parser = build_parser()
    previous_guard = None
    try:
        args = parser.parse_args(argv)
        previous_guard = _resolve_guard(args)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"qdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qdet: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"qdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RouteDisagreementError as exc:
        print(f"qdet: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (
        EnumerationGuardError,
        PreconditionError,
        ModeError,
        ShapeError,
        SingularError,
        ZeroDivisionError,
    ) as exc:
        print(f"qdet: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except QdetError as exc:
        print(f"qdet: error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    finally:
        if previous_guard is not None:
            ncdet.set_enumeration_guard(previous_guard)


if __name__ == "__main__":
    sys.exit(main())
