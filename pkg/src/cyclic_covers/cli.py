"""
Command line interface.

Exit codes: 0 success, 2 invalid mathematical input (or bad flags),
3 malformed input data, 4 I/O error.
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from . import homology, orbit as orbit_mod, origami as ori, spectra
from .errors import InvalidInput, OrbitTooLarge, OrigamiError, ParseError, UnknownFormat
from .spectra import format_rational

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_IO = 0, 2, 3, 4

SCAN_HEADER = ["N", "a1", "a2", "a3", "a4", "genus", "abelian", "spectrum", "sum_positive"]
TABLE_HEADER = ["k", "t1", "t2", "t3", "t4", "t", "dimV10", "dimV01", "dimV", "lambda"]


def _compact(obj):
    return json.dumps(obj, separators=(",", ":"))


def _int_list(s):
    try:
        return [int(x) for x in s.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got %r" % s)


def _params(args):
    return spectra.validate_params(args.N, args.a)


# ---------------------------------------------------------------------------
# cover commands
# ---------------------------------------------------------------------------

def cmd_spectrum(args, out):
    p = _params(args)
    spec = spectra.lyapunov_spectrum(p)
    g = spectra.genus(p)
    if args.format == "json":
        out.write(_compact({
            "N": p.N, "a": list(p.a), "genus": g,
            "spectrum": [{"value": format_rational(v), "mult": m} for v, m in spec.items()],
        }) + "\n")
    else:
        out.write("cover=%s\n" % p)
        out.write("genus=%d\n" % g)
        out.write("spectrum=%s\n" % spec.to_string())
    return EXIT_OK


def table_rows(p):
    """Rows of the eigenspace table; dimensions are those of `V(N-k)`."""
    N = p.N
    rows = []
    for k in range(1, N):
        t = spectra.frac_profile(p, k)
        tk = spectra.t_sum(p, k)
        d10, d01, d = spectra.eigen_dims(p, N - k)
        if tk == 1:
            lam = "-"
        elif tk == 2:
            lam = format_rational(2 * spectra.degree_from_profile(t))
        else:
            lam = "0; 0"
        rows.append([str(k)] + [format_rational(x) for x in t]
                    + [str(tk), str(d10), str(d01), str(d), lam])
    return rows


def cmd_table(args, out):
    p = _params(args)
    rows = table_rows(p)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        w.writerows(rows)
    else:
        allrows = [TABLE_HEADER] + rows
        widths = [max(len(r[i]) for r in allrows) for i in range(len(TABLE_HEADER))]
        for r in allrows:
            out.write("  ".join(c.rjust(wd) for c, wd in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


def scan_tuples(max_N, abelian_only=False):
    """All valid `(N, a)` with `N <= max_N`, in lexicographic order."""
    for N in range(1, max_N + 1):
        for a1 in range(1, N + 1):
            for a2 in range(1, N + 1):
                for a3 in range(1, N + 1):
                    a4 = -(a1 + a2 + a3) % N or N
                    if gcd(N, a1, a2, a3, a4) != 1:
                        continue
                    if abelian_only and not (N % 2 == 0 and a1 & a2 & a3 & a4 & 1):
                        continue
                    yield N, (a1, a2, a3, a4)


def scan_row(N, a):
    p = spectra.CoverParams(N, a)
    spec = spectra.lyapunov_spectrum(p)
    return [str(N)] + [str(x) for x in a] + [
        str(spectra.genus(p)),
        "true" if spectra.is_abelian_square(p) else "false",
        spec.to_string(),
        format_rational(spec.total()),
    ]


def _scan_chunk(chunk):
    return [scan_row(N, a) for N, a in chunk]


def _chunks(it, size):
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def cmd_scan(args, out):
    if args.max_N < 1 or args.jobs < 1:
        raise InvalidInput("--max-N and --jobs must be positive")
    tuples = scan_tuples(args.max_N, args.abelian_only)
    if args.jobs == 1:
        rows = [scan_row(N, a) for N, a in tuples]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = [r for part in pool.map(_scan_chunk, _chunks(tuples, 256)) for r in part]
    rows.sort(key=lambda r: tuple(int(x) for x in r[:5]))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    w.writerows(rows)
    with open(args.out, "w", newline="") as f:
        f.write(buf.getvalue())
    out.write("wrote %d rows to %s\n" % (len(rows), args.out))
    return EXIT_OK


def cmd_minus(args, out):
    p = _params(args)
    q = spectra.double_cover_params(p)
    minus, g_eff = spectra.minus_spectrum(p)
    if args.format == "json":
        out.write(_compact({
            "N": p.N, "a": list(p.a), "cover": {"N": q.N, "a": list(q.a)},
            "spectrum_minus": [{"value": format_rational(v), "mult": m} for v, m in minus.items()],
            "g_eff": g_eff,
        }) + "\n")
    else:
        out.write("cover=%s\n" % q)
        out.write("spectrum_minus=%s\n" % minus.to_string())
        out.write("g_eff=%d\n" % g_eff)
    return EXIT_OK


# ---------------------------------------------------------------------------
# origami commands
# ---------------------------------------------------------------------------

def _load_origami(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as f:
            text = f.read()
    try:
        return ori.Origami.from_json(text)
    except OrigamiError as e:
        raise ParseError("malformed origami: %s" % e) from None


def cmd_origami(args, out):
    sub = args.origami_cmd
    if sub == "stairs":
        if args.N < 1:
            raise InvalidInput("N must be positive")
        out.write(ori.stairs(args.N).to_json() + "\n")
    elif sub == "cover":
        p = _params(args)
        out.write(ori.cyclic_cover_origami(p).to_json() + "\n")
    elif sub == "orbit":
        g = orbit_mod.orbit(_load_origami(args.input), args.max_nodes)
        if args.dot:
            with open(args.dot, "w") as f:
                f.write(orbit_mod.export_orbit(g, "dot"))
        out.write(orbit_mod.export_orbit(g, "json") + "\n")
    elif sub == "automorphisms":
        auts = ori.automorphisms(_load_origami(args.input))
        out.write(_compact([list(s) for s in auts]) + "\n")
    elif sub == "quotient":
        o = _load_origami(args.input)
        out.write(ori.quotient(o, args.sigma).to_json() + "\n")
    elif sub == "cylinders":
        cyls = homology.cylinders(_load_origami(args.input))
        out.write(_compact([{"rows": [list(r) for r in c.rows], "width": c.width,
                             "height": c.height} for c in cyls]) + "\n")
    elif sub == "homdim":
        o = _load_origami(args.input)
        if args.orbit:
            d = orbit_mod.homological_dim_curve(o, args.max_nodes)
        else:
            d = homology.homological_dim_surface(o)
        out.write("%d\n" % d)
    elif sub == "stratum":
        o = _load_origami(args.input)
        s = ori.stratum(o)
        out.write(_compact({"stratum": str(s), "zero_degrees": list(s.zero_degrees),
                            "genus": ori.genus_of(o)}) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_params(p):
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", type=_int_list, required=True, help="c1,c2,c3,c4")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cyclic-covers",
        description="Lyapunov spectra of square-tiled cyclic covers and origami tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="nonnegative Lyapunov spectrum of M_N(a1..a4)")
    _add_params(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table", help="per-k table of t_i(k), dimensions and exponents")
    _add_params(p)
    p.add_argument("--format", choices=["csv", "text"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="spectra of all valid tuples up to a given N, as CSV")
    p.add_argument("--max-N", dest="max_N", type=int, required=True)
    p.add_argument("--abelian-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("minus", help="anti-invariant spectrum of the double cover (odd N)")
    _add_params(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_minus)

    p = sub.add_parser("origami", help="square-tiled surface tools")
    p.set_defaults(func=cmd_origami)
    osub = p.add_subparsers(dest="origami_cmd", required=True)
    q = osub.add_parser("stairs")
    q.add_argument("--N", type=int, required=True)
    q = osub.add_parser("cover")
    _add_params(q)
    for name in ("orbit", "automorphisms", "quotient", "cylinders", "homdim", "stratum"):
        q = osub.add_parser(name)
        q.add_argument("--in", dest="input", required=True, help="origami JSON file or -")
        if name == "orbit":
            q.add_argument("--dot", help="also write the orbit graph in DOT format")
        if name in ("orbit", "homdim"):
            q.add_argument("--max-nodes", type=int, default=orbit_mod.DEFAULT_MAX_NODES)
        if name == "quotient":
            q.add_argument("--sigma", type=_int_list, required=True, help="images of 1..M")
        if name == "homdim":
            q.add_argument("--orbit", action="store_true",
                           help="maximum over the SL(2,Z)-orbit")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, UnknownFormat, json.JSONDecodeError) as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return EXIT_PARSE
    except (InvalidInput, OrbitTooLarge) as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
