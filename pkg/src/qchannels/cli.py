"""Command-line front end and JSON file formats.

Matrix file::

    {"dim": n, "rows": [[[re, im], ...], ...]}

``dim`` is the side of the (square) matrix. Basis file::

    {"dim": n, "elements": [<matrix>, ...]}

Channel spec: a JSON object with a ``kind`` discriminator, one of
``depolarizing`` (``p``), ``transpose``, ``identity``, ``unitary``
(``matrix``), ``kraus`` (``operators``), ``supermatrix`` or ``choi``
(``matrix``, of side ``dim**2``), plus ``dim``.

Exit codes:

    0  success (``check``: channel is CPTP)
    1  ``check`` only: some validity check failed
    2  parse or schema error, bad usage
    3  basis is not orthonormal
    4  I/O error
    5  matrix side is not a perfect square
    6  state dimension does not match the channel
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import analysis, channels, representations
from .errors import DimensionMismatch, NonSquareSide, NotOrthonormal, QChannelsError
from .linalg import isqrt_exact

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_ORTHONORMAL = 3
EXIT_IO = 4
EXIT_NON_SQUARE = 5
EXIT_DIMENSION = 6

KINDS = ("depolarizing", "transpose", "identity", "unitary", "kraus", "supermatrix", "choi")


class ParseError(QChannelsError):
    """Malformed JSON or a field of the wrong type."""


class SchemaError(QChannelsError):
    """Well-formed input whose dimensions are inconsistent."""


class _IOFailure(Exception):
    pass


# -- matrices ------------------------------------------------------------------


def _reject_constant(token):
    raise ParseError(f"non-finite number {token} is not allowed")


def _loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _scalar(x, where: str) -> complex:
    if (
        not isinstance(x, list)
        or len(x) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in x)
    ):
        raise ParseError(f"{where}: expected [re, im], got {x!r}")
    return complex(float(x[0]), float(x[1]))


def rows_to_matrix(rows, where: str = "rows") -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{where}: expected a non-empty list of rows")
    width = len(rows[0])
    out = np.empty((len(rows), width), dtype=complex)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"{where}[{i}]: row has {len(row)} entries, expected {width}")
        for k, x in enumerate(row):
            out[i, k] = _scalar(x, f"{where}[{i}][{k}]")
    return out


def matrix_from_obj(obj, where: str = "matrix") -> np.ndarray:
    """Decode a matrix object, or a bare ``rows`` list."""
    if isinstance(obj, list):
        m = rows_to_matrix(obj, where)
        if m.shape[0] != m.shape[1]:
            raise SchemaError(f"{where}: matrix is {m.shape[0]}x{m.shape[1]}, expected square")
        return m
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ParseError(f"{where}: expected an object with 'dim' and 'rows'")
    m = rows_to_matrix(obj["rows"], f"{where}.rows")
    dim = obj.get("dim", m.shape[0])
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError(f"{where}.dim: expected an integer, got {dim!r}")
    if m.shape != (dim, dim):
        raise SchemaError(f"{where}: dim is {dim} but rows form a {m.shape[0]}x{m.shape[1]} matrix")
    return m


def _num(x: float) -> float:
    # +0.0 folds negative zero so output does not depend on arithmetic sign noise
    return float(x) + 0.0


def matrix_to_obj(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "dim": int(m.shape[0]),
        "rows": [[[_num(z.real), _num(z.imag)] for z in row] for row in m],
    }


def emit_matrix(m) -> str:
    """Serialize with one matrix row per line; floats use shortest round-trip repr."""
    obj = matrix_to_obj(m)
    rows = ",\n".join("    " + json.dumps(r) for r in obj["rows"])
    return f'{{\n  "dim": {obj["dim"]},\n  "rows": [\n{rows}\n  ]\n}}\n'


def parse_matrix(text: str, source: str = "<input>") -> np.ndarray:
    return matrix_from_obj(_loads(text, source), source)


def parse_basis(text: str, source: str = "<basis>") -> representations.MatrixBasis:
    obj = _loads(text, source)
    if not isinstance(obj, dict) or not isinstance(obj.get("elements"), list):
        raise ParseError(f"{source}: expected an object with 'dim' and 'elements'")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"{source}.dim: expected a positive integer, got {dim!r}")
    els = [matrix_from_obj(e, f"{source}.elements[{i}]") for i, e in enumerate(obj["elements"])]
    if len(els) != dim * dim or any(e.shape != (dim, dim) for e in els):
        raise SchemaError(f"{source}: expected {dim * dim} matrices of side {dim}")
    return representations.MatrixBasis.from_elements(els, name=source)


# -- channel specs ---------------------------------------------------------------


@dataclass(frozen=True)
class ChannelSpec:
    kind: str
    dim: int
    p: float | None = None
    matrix: np.ndarray | None = None
    operators: tuple = field(default_factory=tuple)


def parse_channel_spec(text: str, source: str = "<spec>") -> ChannelSpec:
    obj = _loads(text, source)
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: expected a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise ParseError(f"{source}.kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"{source}.dim: expected a positive integer, got {dim!r}")

    if kind == "depolarizing":
        p = obj.get("p")
        if not isinstance(p, (int, float)) or isinstance(p, bool):
            raise ParseError(f"{source}.p: expected a number, got {p!r}")
        if not 0.0 <= p <= 1.0:
            raise SchemaError(f"{source}.p: {p} outside [0, 1]")
        return ChannelSpec(kind, dim, p=float(p))
    if kind in ("transpose", "identity"):
        return ChannelSpec(kind, dim)
    if kind == "kraus":
        ops = obj.get("operators")
        if not isinstance(ops, list) or not ops:
            raise ParseError(f"{source}.operators: expected a non-empty list of matrices")
        mats = tuple(matrix_from_obj(o, f"{source}.operators[{i}]") for i, o in enumerate(ops))
        for i, k in enumerate(mats):
            if k.shape != (dim, dim):
                raise SchemaError(f"{source}.operators[{i}]: shape {k.shape}, expected {(dim, dim)}")
        return ChannelSpec(kind, dim, operators=mats)

    if "matrix" not in obj:
        raise ParseError(f"{source}.matrix: required for kind {kind!r}")
    m = matrix_from_obj(obj["matrix"], f"{source}.matrix")
    side = dim if kind == "unitary" else dim * dim
    if m.shape != (side, side):
        raise SchemaError(f"{source}.matrix: shape {m.shape}, expected {(side, side)}")
    return ChannelSpec(kind, dim, matrix=m)


def build_channel(spec: ChannelSpec) -> channels.Channel:
    if spec.kind == "depolarizing":
        return channels.depolarizing(spec.dim, spec.p)
    if spec.kind == "transpose":
        return channels.transpose_channel(spec.dim)
    if spec.kind == "identity":
        return channels.identity_channel(spec.dim)
    if spec.kind == "unitary":
        return channels.unitary_channel(spec.matrix)
    if spec.kind == "kraus":
        return channels.kraus_channel(spec.operators)
    if spec.kind == "supermatrix":
        return representations.channel_from_supermatrix(spec.matrix)
    if spec.kind == "choi":
        return representations.channel_from_choi(spec.matrix)
    raise ParseError(f"unknown kind {spec.kind!r}")


# -- commands --------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc.strerror or exc}") from None


def _load_channel(path: str) -> channels.Channel:
    return build_channel(parse_channel_spec(_read(path), path))


def _resolve_basis(arg: str, dim: int) -> representations.MatrixBasis:
    if arg == "canonical":
        return representations.base_matrices(dim)
    if arg == "pauli":
        return representations.pauli_basis()
    if arg.startswith("file:"):
        path = arg[len("file:"):]
        return parse_basis(_read(path), path)
    raise ParseError(f"--basis: expected canonical, pauli or file:PATH, got {arg!r}")


def cmd_repr(args) -> int:
    ch = _load_channel(args.spec)
    if args.form == "natural":
        m = representations.natural_representation(ch).m
    elif args.form == "choi":
        m = representations.choi_representation(ch).j
    else:
        b = _resolve_basis(args.basis, ch.dim)
        if b.dim != ch.dim:
            raise SchemaError(f"basis dim {b.dim} does not match channel dim {ch.dim}")
        m = representations.general_natural_representation(ch, b).m
    _write(emit_matrix(m), args.out)
    return EXIT_OK


def cmd_convert(args) -> int:
    text = _read(args.matrix)
    m = parse_matrix(text, args.matrix)
    if isqrt_exact(m.shape[0]) is None:
        raise NonSquareSide(f"{args.matrix}: side {m.shape[0]} is not a perfect square")
    if args.from_ == args.to:
        _write(text, args.out)
    else:
        _write(emit_matrix(representations.reshuffle(m)), args.out)
    return EXIT_OK


def format_verdict(v: analysis.ChannelVerdict) -> str:
    def yn(b):
        return "yes" if b else "no"

    return (
        f"completely positive:      {yn(v.completely_positive)} "
        f"(min Choi eigenvalue {v.min_choi_eigenvalue:.12g})\n"
        f"trace preserving:         {yn(v.trace_preserving)} (residual {v.tp_residual:.12g})\n"
        f"hermiticity preserving:   {yn(v.hermiticity_preserving)} "
        f"(residual {v.hp_residual:.12g})\n"
        f"CPTP:                     {yn(v.cptp)}\n"
    )


def cmd_check(args) -> int:
    ch = _load_channel(args.spec)
    v = analysis.is_cptp(ch)
    if args.json:
        sys.stdout.write(json.dumps(v.as_dict()) + "\n")
    else:
        sys.stdout.write(format_verdict(v))
    ok = v.completely_positive and v.trace_preserving and v.hermiticity_preserving
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_apply(args) -> int:
    ch = _load_channel(args.spec)
    rho = parse_matrix(_read(args.state), args.state)
    _write(emit_matrix(channels.apply(ch, rho)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchannels",
        description="Convert and check finite-dimensional quantum channels.",
        epilog="exit codes: 0 ok, 1 check failed, 2 parse/schema, 3 non-orthonormal basis, "
        "4 I/O, 5 non-square side, 6 dimension mismatch",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repr", help="matrix representation of a channel")
    p.add_argument("spec")
    p.add_argument("--form", choices=("natural", "general", "choi"), default="natural")
    p.add_argument("--basis", default="canonical", help="canonical, pauli or file:PATH (with --form general)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_repr)

    p = sub.add_parser("convert", help="convert between supermatrix and Choi matrix")
    p.add_argument("--from", dest="from_", choices=("natural", "choi"), required=True)
    p.add_argument("--to", choices=("natural", "choi"), required=True)
    p.add_argument("matrix")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="complete positivity and trace preservation")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("apply", help="apply a channel to a state")
    p.add_argument("spec")
    p.add_argument("--state", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_apply)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which matches EXIT_PARSE
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _IOFailure as exc:
        code, msg = EXIT_IO, str(exc)
    except NotOrthonormal as exc:
        code, msg = EXIT_NOT_ORTHONORMAL, str(exc)
    except NonSquareSide as exc:
        code, msg = EXIT_NON_SQUARE, str(exc)
    except DimensionMismatch as exc:
        code = EXIT_DIMENSION if args.command == "apply" else EXIT_PARSE
        msg = str(exc)
    except (QChannelsError, ValueError) as exc:
        code, msg = EXIT_PARSE, str(exc)
    print(f"qchannels {args.command}: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
