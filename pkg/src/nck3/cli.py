"""Command-line front end: ``nck3 <group> <command> [flags]``.

Results go to stdout as JSON. Exit codes: 0 computation finished (negative
answers included), 1 internal assertion failure, 2 malformed input or flags,
3 a bounded search ran out without a decision and ``--strict`` was given.
"""
import argparse
import json
import sys

from . import clifford, cubic, functors, jsonio, lattice, mukai, period, tilt
from .kernels import BACKEND
from .rational import as_fraction, fmt

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


class InputError(Exception):
    pass


class Undecided(Exception):
    def __init__(self, doc):
        super().__init__("bounded search exhausted")
        self.doc = doc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# argument helpers -------------------------------------------------------------

def _ints(text):
    text = text.strip()
    if text.startswith("["):
        vals = json.loads(text)
    else:
        vals = [t for t in text.split(",") if t.strip()]
    return [int(v) for v in vals]


def _rats(text):
    text = text.strip()
    if text.startswith("["):
        vals = json.loads(text)
    else:
        vals = [t for t in text.split(",") if t.strip()]
    return [as_fraction(v if isinstance(v, (int, str)) else str(v)) for v in vals]


def _rat(text):
    return as_fraction(text)


def _read_json(path, stdin):
    if path == "-":
        data = stdin.read() if stdin is not None else ""
    else:
        with open(path) as fh:
            data = fh.read()
    return json.loads(data)


def _lattice(args, stdin):
    if getattr(args, "name", None):
        return lattice.catalog(args.name)
    if getattr(args, "json", None):
        doc = _read_json(args.json, stdin)
        return jsonio.lattice_from_json(doc.get("lattice", doc))
    raise InputError("a lattice is required: --name NAME or --json FILE")


def _kuznetsov(args, stdin):
    if args.json:
        return jsonio.kuznetsov_from_json(_read_json(args.json, stdin))
    if args.model == "mukai":
        return cubic.embed_A2_in_mukai()
    if args.model == "A2":
        return cubic.very_general()
    if args.model.startswith("A2+"):
        return cubic.with_summand(args.model[len("A2+"):])
    raise InputError(f"unknown model {args.model!r}")


def _vec(L, coords):
    return L.vector(coords)


# command implementations ---------------------------------------------------------

def cmd_lattice_show(args, stdin):
    L = _lattice(args, stdin)
    doc = jsonio.lattice_to_json(L)
    doc.update(rank=L.rank, det=L.det(), signature=list(L.signature()))
    return doc


def cmd_lattice_pair(args, stdin):
    L = _lattice(args, stdin)
    return {"pairing": lattice.pair(L, _vec(L, args.x), _vec(L, args.y))}


def cmd_lattice_sum(args, stdin):
    parts = [lattice.catalog(n) for n in args.names]
    out = lattice.orthogonal_sum(*parts, label="+".join(args.names))
    doc = jsonio.lattice_to_json(out)
    doc.update(rank=out.rank, det=out.det())
    return doc


def cmd_lattice_complement(args, stdin):
    L = _lattice(args, stdin)
    sub = lattice.orthogonal_complement(L, [_vec(L, v) for v in args.v])
    return {"rank": sub.rank, "basis": [list(b.coords) for b in sub.basis],
            "gram": [list(r) for r in sub.induced_gram]}


def cmd_lattice_divisibility(args, stdin):
    L = _lattice(args, stdin)
    return {"divisibility": lattice.divisibility(L, _vec(L, args.v))}


def cmd_lattice_primitive(args, stdin):
    L = _lattice(args, stdin)
    return {"primitive": lattice.is_primitive(L, _vec(L, args.v))}


def cmd_lattice_short(args, stdin):
    L = _lattice(args, stdin)
    vs = lattice.short_vectors(L, args.norm)
    return {"norm": args.norm, "count": len(vs), "vectors": [list(v.coords) for v in vs]}


def cmd_lattice_disc(args, stdin):
    L = _lattice(args, stdin)
    return {"order": lattice.discriminant_group_order(L)}


def _ns(args):
    gram = json.loads(args.ns) if args.ns.strip().startswith("[") else [[int(args.ns)]]
    return mukai.PolarizedK3Model(gram)


def _mukai_arg(text, S):
    return jsonio.mukai_from_json(json.loads(text), S)


def cmd_k3_vector(args, stdin):
    S = _ns(args)
    c = args.c if args.c is not None else [0] * S.ns_rank
    return jsonio.mukai_to_json(mukai.mukai_vector(S, args.r, c, args.c2))


def cmd_k3_pair(args, stdin):
    S = _ns(args)
    val = mukai.mukai_pairing(S, _mukai_arg(args.v, S), _mukai_arg(args.w, S))
    return {"pairing": fmt(val), "euler_characteristic": fmt(-val)}


def cmd_k3_classify(args, stdin):
    S = _ns(args)
    v = _mukai_arg(args.v, S)
    return {"class": mukai.classify(v, S), "square": fmt(mukai.mukai_pairing(S, v, v))}


def cmd_cubic_family(args, stdin):
    f = cubic.family_invariants(args.a, args.b)
    return {
        "a": f.a, "b": f.b, "n": f.n, "dim": f.dim, "degree": fmt(f.degree),
        "divisibility": f.divisibility,
        "provenance": {
            "formula": {"degree": fmt(f.degree), "divisibility": f.divisibility},
            "lattice-check": {"degree": fmt(f.lattice_degree), "divisibility": f.lattice_divisibility,
                               "polarization": list(f.polarization)},
        },
        "agree": {"degree": f.degree == f.lattice_degree,
                  "divisibility": f.divisibility == f.lattice_divisibility},
    }


def _kvec(K, args):
    if args.ab is not None:
        a, b = args.ab
        return K.combo(a, b)
    return K.vector(args.v)


def cmd_cubic_moduli(args, stdin):
    K = _kuznetsov(args, stdin)
    r = cubic.moduli_info(K, _kvec(K, args))
    return {"nonempty": r.nonempty, "dim": r.dim, "deformation_class": r.deformation_class}


def cmd_cubic_k3(args, stdin):
    K = _kuznetsov(args, stdin)
    r = cubic.has_associated_k3(K, args.bound)
    doc = {"verdict": r.verdict, "exhaustive": r.exhaustive, "reason": r.reason,
           "witness": [list(w.coords) for w in r.witness],
           "divisibility": r.divisibility, "searched_bound": r.searched_bound}
    if r.verdict == cubic.NONE_WITHIN_BOUND and not r.exhaustive and args.strict:
        raise Undecided(doc)
    return doc


def cmd_cubic_isometry(fn):
    def run(args, stdin):
        K = _kuznetsov(args, stdin)
        v = _kvec(K, args)
        return {"image": list(fn(K, v).coords)}
    return run


def cmd_cubic_h2(args, stdin):
    K = _kuznetsov(args, stdin)
    out = cubic.second_cohomology_model(K, _kvec(K, args))
    L = out.lattice() if isinstance(out, lattice.Sublattice) else out
    doc = {"rank": L.rank, "det": L.det(), "signature": list(L.signature()),
           "gram": [list(r) for r in L.gram]}
    if isinstance(out, lattice.Sublattice):
        doc["basis"] = [list(b.coords) for b in out.basis]
    return doc


def _point(args):
    return tilt.TiltPoint(args.alpha_sq, args.beta)


def _tc(vals):
    return tilt.TiltClass(*vals)


def cmd_tilt_twist(args, stdin):
    return {"class": jsonio.tilt_to_json(tilt.twist_class(_tc(args.c), args.beta))}


def cmd_tilt_charge(args, stdin):
    re, im = tilt.central_charge(_tc(args.c), _point(args))
    return {"re": fmt(re), "im": fmt(im)}


def cmd_tilt_slope(args, stdin):
    mu = tilt.slope(_tc(args.c), _point(args))
    return {"slope": "+inf" if mu == tilt.INF else fmt(mu)}


def cmd_tilt_disc(args, stdin):
    return {"discriminant": fmt(tilt.discriminant(_tc(args.c)))}


def cmd_tilt_support(args, stdin):
    r = tilt.support_check(_point(args))
    return {"kernel": jsonio.tilt_to_json(r.kernel), "delta_on_kernel": fmt(r.delta_on_kernel),
            "pass": r.passed}


def cmd_tilt_wall(args, stdin):
    return jsonio.wall_to_json(tilt.wall(_tc(args.v), _tc(args.w)))


def cmd_tilt_walls(args, stdin):
    scan = tilt.enumerate_walls(_tc(args.v), args.denom, args.bound)
    if args.svg:
        from .svg import walls_svg
        with open(args.svg, "w") as fh:
            fh.write(walls_svg(scan.walls))
    return {"v": jsonio.tilt_to_json(_tc(args.v)), "denom": scan.denom, "bound": scan.bound,
            "walls": [jsonio.wall_to_json(w) for w in scan]}


def cmd_tilt_rotate(args, stdin):
    re, im = tilt.rotate_charge(_tc(args.c), _point(args), args.mu)
    return {"re": fmt(re), "im": fmt(im)}


def cmd_clifford_twist(args, stdin):
    return jsonio.clifford_to_json(clifford.clifford_twist(clifford.P3Chern(*args.c)))


def cmd_clifford_disc(args, stdin):
    d = clifford.clifford_discriminant(clifford.CliffordChern(*args.c))
    return {"discriminant": fmt(d), "bogomolov_ok": d >= 0}


def _triples(text):
    doc = json.loads(text)
    return [clifford.CliffordChern(*(as_fraction(str(x)) if not isinstance(x, str) else as_fraction(x)
                                     for x in t)) for t in doc]


def cmd_clifford_chain(args, stdin):
    left, right = _triples(args.left), _triples(args.right)
    mus = clifford.chain_slopes(left, right, args.alpha_sq)
    return {"holds": clifford.verify_inducing_chain(left, right, args.alpha_sq),
            "slopes": [fmt(m) for m in mus]}


def cmd_clifford_presets(args, stdin):
    table = _read_json(args.json, stdin)
    r = clifford.validate_presets(table)
    return {"valid": r.valid, "missing": list(r.missing), "failures": list(r.failures),
            "discriminants": {k: fmt(v) for k, v in sorted(r.discriminants.items())}}


def cmd_serre(args, stdin):
    names = sorted(functors.load_presets()) if args.all else [args.preset]
    if not args.all and not args.preset:
        raise InputError("--preset NAME or --all is required")
    out = {}
    for name in names:
        p = functors.preset(name)
        r = functors.serre_ku(p)
        out[name] = {"m": p.m, "d": p.d, "c": r.c, "rho": jsonio.word_to_json(r.rho),
                     "sigma": jsonio.word_to_json(r.sigma), "word": jsonio.word_to_json(r.word),
                     "exponent": r.exponent, "cy_dimension": r.cy_dimension}
    return out if args.all else out[args.preset]


def cmd_hochschild(args, stdin):
    if args.preset:
        table = functors.load_json("hochschild.json")
        if args.preset not in table:
            raise InputError(f"no Hochschild data for preset {args.preset!r}")
        entry = table[args.preset]
        dims, n = jsonio.dims_from_json(entry["ambient"]), entry["n_exceptional"]
    elif args.json:
        dims, n = jsonio.dims_from_json(_read_json(args.json, stdin)), args.exceptional
    else:
        raise InputError("--preset NAME or --json FILE is required")
    if n is None:
        raise InputError("--exceptional N is required with --json")
    return jsonio.dims_to_json(functors.hochschild_ku(dims, n))


def _period_point(args, stdin, L):
    if args.point:
        return jsonio.period_from_json(_read_json(args.point, stdin))
    if args.x is None or args.y is None:
        raise InputError("period point needed: --x and --y, or --point FILE")
    return period.PeriodPoint(args.x, args.y)


def cmd_period_eta(args, stdin):
    L = _lattice(args, stdin)
    return jsonio.period_to_json(period.eta_vector(L, args.re, args.im))


def cmd_period_in_p(args, stdin):
    L = _lattice(args, stdin)
    p = _period_point(args, stdin, L)
    return {"member": period.in_P(L, p)}


def cmd_period_in_p0(args, stdin):
    L = _lattice(args, stdin)
    p = _period_point(args, stdin, L)
    r = period.in_P0(L, p)
    doc = {"member": r.member}
    if r.witness is not None:
        doc["witness"] = list(r.witness.coords)
    return doc


def cmd_period_wall(args, stdin):
    L = _lattice(args, stdin)
    p = _period_point(args, stdin, L)
    return {"on_wall": period.wall_test(L, p, L.vector(args.v), L.vector(args.w))}


def cmd_data_dump(args, stdin):
    names = ["U", "U(2)", "U(3)", "A2", "A2neg", "E8neg", "K3", "mukai"]
    return {
        "catalog": {n: jsonio.lattice_to_json(lattice.catalog(n)) for n in names},
        "catalog_syntax": lattice.CATALOG_NAMES,
        "presets": functors.load_json("presets.json"),
        "hochschild": functors.load_json("hochschild.json"),
        "period_fixtures": functors.load_json("period_fixtures.json"),
        "clifford_chain": functors.load_json("clifford_chain.json"),
        "backend": BACKEND,
    }


# parser ---------------------------------------------------------------------------

def _add_lattice_src(p):
    p.add_argument("--name", help="catalog name, e.g. A2, U(3), A2+<-6>, mukai")
    p.add_argument("--json", help="lattice JSON file ({'gram': ...}); '-' for stdin")


def _add_point(p):
    p.add_argument("--alpha-sq", dest="alpha_sq", type=_rat, required=True)
    p.add_argument("--beta", type=_rat, required=True)


def _add_kuz(p):
    p.add_argument("--model", default="mukai",
                   help="mukai (rank 24, default), A2, or A2+NAME for A2 plus a catalog summand")
    p.add_argument("--json", help="Kuznetsov lattice JSON {'gram', 'lambda1', 'lambda2'}")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ab", type=_ints, help="a,b for v = a*lambda1 + b*lambda2")
    g.add_argument("--v", type=_ints, help="coordinates in the ambient lattice")


def build_parser():
    parser = _Parser(prog="nck3", description=__doc__.splitlines()[0])
    parser.add_argument("--output", help="write the JSON result to FILE instead of stdout")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    g = groups.add_parser("lattice").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("show"); _add_lattice_src(p); p.set_defaults(func=cmd_lattice_show)
    p = g.add_parser("pair"); _add_lattice_src(p)
    p.add_argument("--x", type=_ints, required=True); p.add_argument("--y", type=_ints, required=True)
    p.set_defaults(func=cmd_lattice_pair)
    p = g.add_parser("direct-sum"); p.add_argument("names", nargs="+"); p.set_defaults(func=cmd_lattice_sum)
    p = g.add_parser("complement"); _add_lattice_src(p)
    p.add_argument("--v", type=_ints, action="append", required=True); p.set_defaults(func=cmd_lattice_complement)
    p = g.add_parser("divisibility"); _add_lattice_src(p)
    p.add_argument("--v", type=_ints, required=True); p.set_defaults(func=cmd_lattice_divisibility)
    p = g.add_parser("primitive"); _add_lattice_src(p)
    p.add_argument("--v", type=_ints, required=True); p.set_defaults(func=cmd_lattice_primitive)
    p = g.add_parser("short-vectors"); _add_lattice_src(p)
    p.add_argument("--norm", type=int, required=True); p.set_defaults(func=cmd_lattice_short)
    p = g.add_parser("disc-order"); _add_lattice_src(p); p.set_defaults(func=cmd_lattice_disc)

    g = groups.add_parser("k3").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("vector"); p.add_argument("--ns", required=True, help="NS Gram as JSON, or one integer H^2")
    p.add_argument("--r", type=int, required=True); p.add_argument("--c", type=_ints)
    p.add_argument("--c2", type=int, required=True); p.set_defaults(func=cmd_k3_vector)
    p = g.add_parser("pair"); p.add_argument("--ns", required=True)
    p.add_argument("--v", required=True, help='Mukai JSON {"r":..,"c":[..],"s":"p/q"}')
    p.add_argument("--w", required=True); p.set_defaults(func=cmd_k3_pair)
    p = g.add_parser("classify"); p.add_argument("--ns", required=True)
    p.add_argument("--v", required=True); p.set_defaults(func=cmd_k3_classify)

    g = groups.add_parser("cubic").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("family"); p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True); p.set_defaults(func=cmd_cubic_family)
    p = g.add_parser("moduli"); _add_kuz(p); p.set_defaults(func=cmd_cubic_moduli)
    p = g.add_parser("degree-shift"); _add_kuz(p); p.set_defaults(func=cmd_cubic_isometry(cubic.degree_shift))
    p = g.add_parser("orientation"); _add_kuz(p)
    p.set_defaults(func=cmd_cubic_isometry(cubic.orientation_reversal))
    p = g.add_parser("h2"); _add_kuz(p); p.set_defaults(func=cmd_cubic_h2)
    p = g.add_parser("associated-k3")
    p.add_argument("--model", default="A2"); p.add_argument("--json")
    p.add_argument("--bound", type=int, default=cubic.DEFAULT_SEARCH_BOUND)
    p.add_argument("--strict", action="store_true", help="exit 3 when the search is inconclusive")
    p.set_defaults(func=cmd_cubic_k3)

    g = groups.add_parser("tilt").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("twist"); p.add_argument("--c", type=_rats, required=True)
    p.add_argument("--beta", type=_rat, required=True); p.set_defaults(func=cmd_tilt_twist)
    for name, fn in (("charge", cmd_tilt_charge), ("slope", cmd_tilt_slope)):
        p = g.add_parser(name); p.add_argument("--c", type=_rats, required=True); _add_point(p)
        p.set_defaults(func=fn)
    p = g.add_parser("disc"); p.add_argument("--c", type=_rats, required=True); p.set_defaults(func=cmd_tilt_disc)
    p = g.add_parser("support"); _add_point(p); p.set_defaults(func=cmd_tilt_support)
    p = g.add_parser("wall"); p.add_argument("--v", type=_rats, required=True)
    p.add_argument("--w", type=_rats, required=True); p.set_defaults(func=cmd_tilt_wall)
    p = g.add_parser("walls"); p.add_argument("--v", type=_rats, required=True)
    p.add_argument("--denom", type=int, default=1); p.add_argument("--bound", type=int, default=10)
    p.add_argument("--svg", help="also draw the walls to an SVG file"); p.set_defaults(func=cmd_tilt_walls)
    p = g.add_parser("rotate"); p.add_argument("--c", type=_rats, required=True); _add_point(p)
    p.add_argument("--mu", type=_rat, required=True); p.set_defaults(func=cmd_tilt_rotate)

    g = groups.add_parser("clifford").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("twist"); p.add_argument("--c", type=_rats, required=True)
    p.set_defaults(func=cmd_clifford_twist)
    p = g.add_parser("disc"); p.add_argument("--c", type=_rats, required=True)
    p.set_defaults(func=cmd_clifford_disc)
    p = g.add_parser("chain"); p.add_argument("--left", required=True, help='JSON list of three triples')
    p.add_argument("--right", required=True); p.add_argument("--alpha-sq", dest="alpha_sq", type=_rat, default=1)
    p.set_defaults(func=cmd_clifford_chain)
    p = g.add_parser("presets"); p.add_argument("--json", required=True)
    p.set_defaults(func=cmd_clifford_presets)

    p = groups.add_parser("serre"); p.add_argument("--preset"); p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_serre)
    p = groups.add_parser("hochschild"); p.add_argument("--preset"); p.add_argument("--json")
    p.add_argument("--exceptional", type=int); p.set_defaults(func=cmd_hochschild)

    g = groups.add_parser("period").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("eta"); _add_lattice_src(p)
    p.add_argument("--re", type=_rats, required=True); p.add_argument("--im", type=_rats, required=True)
    p.set_defaults(func=cmd_period_eta)
    for name, fn in (("in-p", cmd_period_in_p), ("in-p0", cmd_period_in_p0), ("wall-test", cmd_period_wall)):
        p = g.add_parser(name); _add_lattice_src(p)
        p.add_argument("--x", type=_rats); p.add_argument("--y", type=_rats)
        p.add_argument("--point", help="period point JSON {'x': [...], 'y': [...]}")
        if name == "wall-test":
            p.add_argument("--v", type=_ints, required=True); p.add_argument("--w", type=_ints, required=True)
        p.set_defaults(func=fn)

    g = groups.add_parser("data").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("dump"); p.set_defaults(func=cmd_data_dump)
    return parser


def run(argv, stdin=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"nck3: {exc}", file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    code = EXIT_OK
    try:
        doc = args.func(args, stdin)
    except Undecided as exc:
        doc, code = exc.doc, EXIT_UNDECIDED
        print("nck3: search bound exhausted without a decision", file=stderr)
    except AssertionError as exc:
        print(f"nck3: internal check failed: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (InputError, ValueError, KeyError, TypeError, OSError, ZeroDivisionError) as exc:
        print(f"nck3: {exc}", file=stderr)
        return EXIT_INPUT
    text = jsonio.dumps(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run(sys.argv[1:], sys.stdin))
