"""Command-line front end. Exit codes: 0 ok, 1 usage, 2 validation failed, 3 oracle gave up."""

from __future__ import annotations

import argparse
import csv
import sys

from .diameter import cut_time_max_numeric, diameter_bound
from .geodesic import exp_lens
from .locus import Stratum, export_locus_csv, sample_cut_locus, sr_limit_sweep
from .metric import InitialCovector, MetricParams, t_of_tau
from .oracle import NoPartner, NotReached
from .roots import NoRootInRange
from .times import conjugate_tau, cut_time
from .validation import run_validation


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _num(x) -> str:
    return format(float(x) + 0.0, ".17g")  # + 0.0 turns -0.0 into 0.0


def _value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, float)):
        return _num(v)
    return '"' + str(v).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_json(fields: dict) -> str:
    """One-line JSON object; floats with 17 significant digits, keys in insertion order."""
    return "{" + ", ".join(f'"{k}": {_value(v)}' for k, v in fields.items()) + "}"


def to_csv(fields: dict) -> str:
    keys = list(fields)
    return ",".join(keys) + "\n" + ",".join(_value(fields[k]).strip('"') for k in keys)


def _emit(fields: dict, fmt: str = "json"):
    print(to_csv(fields) if fmt == "csv" else to_json(fields))


def _params(a, with_lens=True) -> MetricParams:
    if with_lens:
        return MetricParams(a.p, a.qq, a.I1, a.I3)
    return MetricParams(1, 1, a.I1, a.I3)


def _lens_flags(sp, i3=True):
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--qq", type=int, required=True, help="lens parameter q")
    sp.add_argument("--I1", type=float, required=True)
    if i3:
        sp.add_argument("--I3", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lenscut", description="Cut times, cut loci and diameters of Berger lens spaces.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    sp = sub.add_parser("exp", help="endpoint of the arclength geodesic")
    _lens_flags(sp)
    sp.add_argument("--h3", type=float, required=True)
    sp.add_argument("--phi", type=float, required=True)
    sp.add_argument("--t", type=float, required=True)
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("cut-time", help="tau_ell, conjugate and cut times for one h3bar")
    _lens_flags(sp)
    sp.add_argument("--h3", type=float, required=True)
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("conjugate-time", help="first conjugate time")
    sp.add_argument("--I1", type=float, required=True)
    sp.add_argument("--I3", type=float, required=True)
    sp.add_argument("--h3", type=float, required=True)

    sp = sub.add_parser("cut-locus", help="sample the cut locus into a CSV file")
    _lens_flags(sp)
    sp.add_argument("--nh3", type=int, required=True)
    sp.add_argument("--nphi", type=int, required=True)
    sp.add_argument("--out", required=True)

    sp = sub.add_parser("diameter", help="closed-form diameter bound")
    _lens_flags(sp)
    sp.add_argument("--numeric", action="store_true", help="also maximize t_cut numerically")
    sp.add_argument("--n", type=int, default=1001)

    sp = sub.add_parser("sr-limit", help="sweep eta toward the sub-Riemannian limit")
    _lens_flags(sp, i3=False)
    sp.add_argument("--etas", required=True, help="comma-separated, decreasing toward -1")
    sp.add_argument("--out", required=True)

    sp = sub.add_parser("validate", help="run the self-check suite")
    sp.add_argument("--level", choices=["quick", "full"], default="quick")
    return ap


def _cmd_exp(a):
    pt = exp_lens(InitialCovector(a.h3, a.phi), a.t, _params(a)).rep
    _emit({"q0": pt.q0, "q1": pt.q1, "q2": pt.q2, "q3": pt.q3}, a.format)
    return 0


def _cmd_cut_time(a):
    cd = cut_time(a.h3, _params(a))
    _emit(
        {
            "tau_ell_minus": cd.tau_ell_minus,
            "tau_ell_plus": cd.tau_ell_plus,
            "tau_ell": cd.tau_ell,
            "tau_conj": cd.tau_conj,
            "t_cut": cd.t_cut,
            "regime": cd.regime.value,
        },
        a.format,
    )
    return 0


def _cmd_conjugate(a):
    pr = _params(a, with_lens=False)
    tau = conjugate_tau(a.h3, pr.eta)
    _emit({"tau_conj": tau, "t_conj": t_of_tau(tau, a.h3, pr)})
    return 0


def _cmd_cut_locus(a):
    samples = sample_cut_locus(_params(a), a.nh3, a.nphi)
    export_locus_csv(samples, a.out)
    n_int = sum(s.stratum is Stratum.INTERVAL for s in samples)
    _emit({"samples": len(samples), "surface": len(samples) - n_int, "interval": n_int})
    return 0


def _cmd_diameter(a):
    pr = _params(a)
    b = diameter_bound(pr)
    out = {"value": b.value, "case": b.case_tag, "exact": b.exact, "argmax_h3": b.argmax_h3bar}
    if a.numeric:
        v, h = cut_time_max_numeric(pr, a.n)
        out["numeric_value"] = v
        out["numeric_argmax_h3"] = h
    _emit(out)
    return 0


def _cmd_sr_limit(a):
    try:
        etas = [float(x) for x in a.etas.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --etas: {exc}") from exc
    base = MetricParams.from_eta(a.p, a.qq, a.I1, etas[0] if etas else -0.5)
    rows = sr_limit_sweep(base, etas)
    with open(a.out, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["eta", "t_cut_0", "t_cut_1", "interval_lower_endpoint"])
        for r in rows:
            w.writerow([_num(v) for v in r])
    _emit({"rows": len(rows)})
    return 0


def _cmd_validate(a):
    report, ok = run_validation(a.level)
    sys.stdout.write(report)
    return 0 if ok else 2


COMMANDS = {
    "exp": _cmd_exp,
    "cut-time": _cmd_cut_time,
    "conjugate-time": _cmd_conjugate,
    "cut-locus": _cmd_cut_locus,
    "diameter": _cmd_diameter,
    "sr-limit": _cmd_sr_limit,
    "validate": _cmd_validate,
}


def _glue_negative_values(argv):
    # "--etas -0.9,-0.99" would otherwise read the list as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--etas":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--etas={nxt}")
        else:
            out.append(tok)
    return out


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        a = build_parser().parse_args(_glue_negative_values(argv))
        return COMMANDS[a.cmd](a)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (NotReached, NoPartner) as exc:
        print(f"lenscut: oracle: {exc}", file=sys.stderr)
        return 3
    except NoRootInRange as exc:
        print(f"lenscut: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"lenscut: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
