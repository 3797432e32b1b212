"""``hightrig`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 I/O failure.
Numbers are written with 17 significant digits; non-finite values as the
strings ``inf``, ``-inf`` and ``nan``.  Global flags may appear before or
after the command name.
"""
import argparse
import json
import io
import math
import sys

from . import complex_trig as ct
from . import real_trig as rt
from .constants import constants_for, pparam
from .verify import run_checks

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x):
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return "%.17g" % x


def _json(obj):
    """Serialize with 17-digit floats; non-finite floats become strings."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        s = fmt(obj)
        return s if math.isfinite(obj) else f'"{s}"'
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{_json(str(k))}: {_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in obj) + "]"
    raise TypeError(type(obj))


def _parse_p(text):
    try:
        return pparam(int(text)).p
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid p {text!r}: {exc}") from None


def _parse_plist(text):
    return [_parse_p(t) for t in str(text).split(",") if t.strip()]


def _parse_z(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--z expects re,im; got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise UsageError(f"--z expects re,im; got {text!r}") from None


def _parse_range(text, name):
    parts = text.split(":")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except (ValueError, IndexError):
        raise UsageError(f"--{name} expects min:max:count; got {text!r}") from None
    if len(parts) != 3 or n < 2 or not lo < hi:
        raise UsageError(f"--{name} needs min < max and count >= 2; got {text!r}")
    return [lo + (hi - lo) * j / (n - 1) for j in range(n)]


def _emit(args, text):
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"hightrig: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- commands ---------------------------------------------------------------

def cmd_constants(args):
    p = _parse_p(args.p)
    k = constants_for(p)
    res = k.identity_residuals()
    rec = {
        "p": p, "a": k.A, "b": k.B, "k": k.K, "l": k.L,
        "picard_r": k.picard_r, "band_halfwidth": k.band_halfwidth,
        "real_period": k.real_period, "complex_period": k.complex_period,
        "b_infinite": k.b_infinite,
        "residual_a_over_b_minus_2cos": res["ratio"],
        "residual_a_minus_2k": res["a_minus_2k"],
        "residual_l_minus_b": res["l_minus_b"],
    }
    if args.json:
        return _emit(args, _json(rec) + "\n")
    lines = []
    for key, val in rec.items():
        if val is None:
            sval = "none"
        elif isinstance(val, bool):
            sval = "true" if val else "false"
        else:
            sval = str(val) if isinstance(val, int) else fmt(val)
        lines.append(f"{key:<30s} {sval}")
    return _emit(args, "\n".join(lines) + "\n")


def cmd_eval(args):
    p = _parse_p(args.p)
    if (args.x is None) == (args.z is None):
        raise UsageError("eval needs exactly one of --x or --z")
    if args.x is not None:
        try:
            x = float(args.x)
        except ValueError:
            raise UsageError(f"--x expects a real number; got {args.x!r}") from None
        e = rt.eval_real(p, x)
        rec = {"p": p, "x": x, "s": e.s, "c": e.c, "t": e.t, "status": e.status,
               "residual": abs(e.s ** p + e.c ** p - 1.0) if e.status != rt.OUT_OF_DOMAIN else math.nan}
    else:
        z = _parse_z(args.z)
        e = ct.eval_complex(p, z)
        t = e.t
        pole = ct.is_pole(t)
        t = complex(math.inf, math.inf) if pole else complex(t)
        status = "at_pole_of_t" if pole and e.ok else e.status
        rec = {"p": p, "z_re": z.real, "z_im": z.imag,
               "s_re": e.s.real, "s_im": e.s.imag, "c_re": e.c.real, "c_im": e.c.imag,
               "t_re": t.real, "t_im": t.imag, "status": status,
               "residual": e.pythagorean_residual()}
        if e.info and not e.ok:
            rec["info"] = e.info
    if args.json:
        return _emit(args, _json(rec) + "\n")
    lines = [f"{k:<9s} {v if isinstance(v, (str, int)) else fmt(v)}" for k, v in rec.items()]
    return _emit(args, "\n".join(lines) + "\n")


def cmd_table(args):
    p = _parse_p(args.p)
    lo, hi, step = args.from_, args.to, args.step
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi) or not step > 0:
        raise UsageError("table needs from < to and step > 0")
    n = int(math.floor((hi - lo) / step * (1 + 1e-12) + 1e-9))
    buf = io.StringIO()
    buf.write("x,s,c,t,status\n")
    for j in range(n + 1):
        x = lo + j * step
        e = rt.eval_real(p, x)
        buf.write(f"{fmt(x)},{fmt(e.s)},{fmt(e.c)},{fmt(e.t)},{e.status}\n")
    return _emit(args, buf.getvalue())


def _grid_value(p, z, func):
    e = ct.eval_complex(p, z)
    if e.status == ct.REJECTED:
        return complex(math.nan, math.nan), e.status
    if func == "s":
        return e.s, e.status
    if func == "c":
        return e.c, e.status
    t = e.t
    if ct.is_pole(t):
        return complex(math.inf, math.inf), "at_pole_of_t"
    return t, e.status


def cmd_grid(args):
    p = _parse_p(args.p)
    res = _parse_range(args.re, "re")
    ims = _parse_range(args.im, "im")
    buf = io.StringIO()
    buf.write("re,im,val_re,val_im,status\n")
    for y in ims:
        for x in res:
            v, status = _grid_value(p, complex(x, y), args.func)
            buf.write(f"{fmt(x)},{fmt(y)},{fmt(v.real)},{fmt(v.imag)},{status}\n")
    return _emit(args, buf.getvalue())


def cmd_coeffs(args):
    p = _parse_p(args.p)
    if args.n < 2:
        raise UsageError("coeffs needs n >= 2")
    ser = ct.taylor_coeffs(p, args.n)
    a = {n: v for n, v in enumerate(ser.a) if v != 0.0}
    b = {n: v for n, v in enumerate(ser.b) if v != 0.0}
    if args.json:
        return _emit(args, _json({"p": p, "n": args.n, "a": a, "b": b}) + "\n")
    lines = ["index,a_n"] + [f"{n},{fmt(v)}" for n, v in a.items()]
    lines += ["", "index,b_n"] + [f"{n},{fmt(v)}" for n, v in b.items()]
    return _emit(args, "\n".join(lines) + "\n")


def cmd_verify(args):
    ps = _parse_plist(args.p)
    if not ps:
        raise UsageError("verify needs at least one p")
    results = []
    for p in ps:
        results += run_checks(p, tol=args.tol)
    failed = [r for r in results if not r.passed]
    if args.json:
        rec = {"tol": args.tol, "passed": not failed,
               "checks": [{"p": r.p, "name": r.name, "residual": r.residual,
                           "threshold": r.threshold, "passed": r.passed} for r in results]}
        code = _emit(args, _json(rec) + "\n")
    else:
        text = "\n".join(r.line() for r in results)
        text += f"\n{len(results) - len(failed)}/{len(results)} checks passed\n"
        code = _emit(args, text)
    if code != EXIT_OK:
        return code
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {
    "constants": cmd_constants, "eval": cmd_eval, "table": cmd_table,
    "grid": cmd_grid, "coeffs": cmd_coeffs, "verify": cmd_verify,
}


def _add_globals(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--p", default=d("2"), help="parameter p >= 2 (verify: comma list)")
    parser.add_argument("--json", action="store_true", default=d(False), help="JSON output")
    parser.add_argument("--out", default=d(None), help="write output to this path")
    parser.add_argument("--tol", type=float, default=d(1e-9), help="verify tolerance")


def build_parser():
    parser = argparse.ArgumentParser(prog="hightrig", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "constants": "report A, B, K, L and derived constants",
        "eval": "evaluate s, c, t at a real or complex point",
        "table": "CSV table of s, c, t on a real grid",
        "grid": "CSV of s, c or t on a complex grid",
        "coeffs": "Taylor coefficients at 0",
        "verify": "run the invariant suite",
    }
    subs = {}
    for name, help_ in specs.items():
        sp = sub.add_parser(name, help=help_)
        _add_globals(sp, suppress=True)
        subs[name] = sp
    subs["eval"].add_argument("--x", help="real argument")
    subs["eval"].add_argument("--z", help="complex argument as re,im")
    subs["table"].add_argument("--from", dest="from_", type=float, required=True)
    subs["table"].add_argument("--to", type=float, required=True)
    subs["table"].add_argument("--step", type=float, required=True)
    subs["grid"].add_argument("--re", required=True, help="min:max:count")
    subs["grid"].add_argument("--im", required=True, help="min:max:count")
    subs["grid"].add_argument("--func", choices=("s", "c", "t"), default="s")
    subs["coeffs"].add_argument("--n", type=int, default=12)
    return parser


_VALUE_FLAGS = ("--x", "--z", "--re", "--im", "--from", "--to")


def _glue_negative_values(argv):
    """Rewrite ``--im -1:1:5`` as ``--im=-1:1:5`` so argparse keeps negative values."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ARGS
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hightrig: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
