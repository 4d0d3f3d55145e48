"""Command-line front end.

Exit codes: 0 success, 1 bad parameters or usage, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import SCHEMA_VERSION, jordan
from .chain import Kernel, build_kernel, distance_series, lazy
from .errors import ConsistencyError, TensorWalkError
from .families import FAMILY_TAGS, FamilyId, default_hold, make_spec, spec_to_json
from .families.base import PARAM_NAME
from .simulate import SimConfig, counts_to_csv, empirical_counts, state_name
from .spectral import brauer_spectrum

EXIT_OK, EXIT_PARAM, EXIT_CONSISTENCY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number or fraction: {text!r}")


def _fstr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _label(s):
    return list(s) if isinstance(s, tuple) else s


def _family_args(p: argparse.ArgumentParser, with_start: bool = True) -> None:
    p.add_argument("--family", required=True, choices=FAMILY_TAGS)
    p.add_argument("--p", type=int, help="prime parameter (sl2p, sl2p2, sl3p)")
    p.add_argument("--n", type=int, help="integer parameter (bdn, sl2_2n, quantum)")
    p.add_argument("--tensor", default="natural")
    p.add_argument("--lazy", type=_frac, default=None, help="holding probability (default depends on family)")
    if with_start:
        p.add_argument("--start", default=None, help="start state (default: trivial)")
    p.add_argument("--output", default=None, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tensorwalk", description="Tensor-product Markov chains on irreducible characters.")
    ap.add_argument("--version", action="version", version=SCHEMA_VERSION)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    k = sub.add_parser("kernel", help="transition matrix as exact rationals")
    _family_args(k, with_start=False)
    k.add_argument("--format", choices=("json", "csv"), default="json")
    k.add_argument("--dump-spec", action="store_true", help="emit the chain specification instead")

    s = sub.add_parser("stationary", help="stationary distribution")
    _family_args(s, with_start=False)
    s.add_argument("--format", choices=("json", "csv"), default="csv")

    sp = sub.add_parser("spectrum", help="eigenvalues with residuals (Jordan report for quantum)")
    _family_args(sp, with_start=False)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    d = sub.add_parser("distance", help="tv and l-infinity distance series")
    _family_args(d)
    d.add_argument("--lmax", type=int, required=True)
    d.add_argument("--format", choices=("json", "csv"), default="csv")

    m = sub.add_parser("simulate", help="seeded Monte Carlo histogram")
    _family_args(m)
    m.add_argument("--seed", type=int, required=True)
    m.add_argument("--samples", type=int, required=True)
    m.add_argument("--steps", type=int, required=True)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("--family", default="all", choices=("all",) + FAMILY_TAGS)
    v.add_argument("--max-p", type=int, default=None)
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--output", default=None)
    return ap


# -- helpers ----------------------------------------------------------------------


def _family_id(args) -> FamilyId:
    name = PARAM_NAME[args.family]
    value = getattr(args, name)
    other = "n" if name == "p" else "p"
    if value is None:
        raise _Usage(f"--family {args.family} needs --{name}")
    if getattr(args, other) is not None:
        raise _Usage(f"--family {args.family} takes --{name}, not --{other}")
    return FamilyId(args.family, value)


class _Usage(Exception):
    pass


def _kernel(args):
    spec = make_spec(_family_id(args), args.tensor)
    if args.lazy is not None:
        hold = args.lazy
    elif args.command == "kernel":
        hold = Fraction(0)  # the raw kernel unless laziness is asked for
    else:
        hold = default_hold(spec.family.tag, spec.tensor)
    k = build_kernel(spec)
    if hold:
        k = lazy(k, hold)
    return spec, k, hold


def _start(k: Kernel, text):
    if text is None:
        return k.state_labels[0]
    key = text.replace(" ", "")
    for label in k.state_labels:
        name = state_name(label)
        if key in (name, name.strip("()")):
            return label
    raise _Usage(f"unknown start state {text!r}")


def _kernel_json(spec, k: Kernel, hold) -> dict:
    return {
        "family": spec.family.tag,
        "params": spec.family.params,
        "tensor": spec.tensor,
        "hold": _fstr(Fraction(hold)),
        "states": [_label(s) for s in k.state_labels],
        "stationary": [_fstr(x) for x in k.stationary],
        "kernel": [[_fstr(v) for v in row] for row in k.rows],
    }


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _spectrum(spec, k: Kernel, hold):
    if spec.family.tag == "quantum":
        if spec.tensor != "natural":
            raise _Usage("the quantum Jordan report is for --tensor natural")
        if hold:
            raise _Usage("the quantum Jordan report is for --lazy 0")
        return jordan.spectrum_report(spec.family.param)
    sd = brauer_spectrum(spec, hold)
    P = k.dense
    R, L, b = sd.right_vectors, sd.left_vectors, sd.eigenvalues
    rr = np.abs(P @ R - R * b[None, :]).max(axis=0)
    rl = np.abs(L @ P - L * b[:, None]).max(axis=1)
    return [
        {
            "class_id": cid,
            "eigenvalue_re": float(b[i].real),
            "eigenvalue_im": float(b[i].imag),
            "residual_right": float(rr[i]),
            "residual_left": float(rl[i]),
        }
        for i, cid in enumerate(sd.class_ids)
    ]


def _records_csv(records: list[dict]) -> str:
    if not records:
        return ""
    keys = list(records[0])
    return _csv([keys] + [[r[k] if not isinstance(r[k], float) else repr(r[k]) for k in keys] for r in records])


def _dumps(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


# -- commands -----------------------------------------------------------------------


def _run(args) -> tuple[str, int]:
    cmd = args.command
    if cmd == "verify":
        from .verify import run_verify

        checks = run_verify(args.family, args.max_p, args.max_n, args.jobs)
        failed = [c for c in checks if not c.ok]
        text = "\n".join(c.line() for c in checks) + f"\n{len(checks) - len(failed)}/{len(checks)} checks passed\n"
        return text, EXIT_CONSISTENCY if failed else EXIT_OK

    if cmd == "kernel" and args.dump_spec:
        spec = make_spec(_family_id(args), args.tensor)
        return _dumps(spec_to_json(spec)), EXIT_OK

    spec, k, hold = _kernel(args)
    if cmd == "kernel":
        if args.format == "json":
            return _dumps(_kernel_json(spec, k, hold)), EXIT_OK
        names = [state_name(s) for s in k.state_labels]
        rows = [["from", "to", "prob"]]
        for i, nz in enumerate(k.nonzero):
            rows.extend([names[i], names[j], _fstr(v)] for j, v in nz)
        return _csv(rows), EXIT_OK
    if cmd == "stationary":
        if args.format == "json":
            return _dumps({"states": [_label(s) for s in k.state_labels], "stationary": [_fstr(x) for x in k.stationary]}), EXIT_OK
        rows = [["state", "pi", "pi_float"]]
        rows.extend([state_name(s), _fstr(x), repr(float(x))] for s, x in zip(k.state_labels, k.stationary))
        return _csv(rows), EXIT_OK
    if cmd == "spectrum":
        records = _spectrum(spec, k, hold)
        return (_dumps(records) if args.format == "json" else _records_csv(records)), EXIT_OK
    if cmd == "distance":
        if args.lmax < 0:
            raise _Usage("--lmax must be nonnegative")
        ds = distance_series(k, _start(k, args.start), args.lmax)
        if args.format == "csv":
            return ds.to_csv(), EXIT_OK
        return _dumps({"step": ds.steps.tolist(), "tv": ds.tv.tolist(), "linf": ds.linf.tolist()}), EXIT_OK
    if cmd == "simulate":
        cfg = SimConfig(args.seed, args.samples, _start(k, args.start), args.steps)
        return counts_to_csv(k, empirical_counts(k, cfg)), EXIT_OK
    raise _Usage(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = _run(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"tensorwalk: error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except ConsistencyError as exc:
        print(f"tensorwalk: consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (TensorWalkError, ValueError) as exc:
        print(f"tensorwalk: error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
