"""Command-line interface.

Inputs may be a bundled fixture name, a file, literal text, or ``-`` (stdin,
also the default when the argument is omitted).  Exit status: 0 success,
1 domain error, 2 usage or format error, 3 a search cap or budget was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import __version__
from .artin import FreeWord, act, braids_equal
from .braid import (
    BandRepresentation,
    BraidWord,
    closure_invariants,
    delta,
    delta_squared,
    exponent_sum,
    fiber_genus,
    permutation,
)
from .errors import CurveBraidsError, FormatError, SearchCapExceeded
from .fixtures import BandFixture, BranchFixture, FixtureCheckWarning, PolyFixture, load_fixtures
from .formats import format_brep, parse_any, to_json
from .knotgroup import (
    BudgetExceededWarning,
    GroupPresentation,
    NotDeltaSquaredWarning,
    abelianization,
    bidisk_presentation,
    coset_enumerate,
    count_homs_to_symmetric,
    projective_presentation,
    tietze_simplify,
)
from .knotgroup.tietze import DEFAULT_BUDGET
from .monodromy import PolyCurve, track_parametric, track_polynomial
from .puiseux import (
    BranchParam,
    branch_genus,
    cable_cascade,
    cascade_braid,
    g_sequence,
    milnor_number,
)
from .selftest import fixtures_selftest

OK, DOMAIN, USAGE, EXCEEDED = 0, 1, 2, 3


class _Usage(Exception):
    pass


class _Exceeded(Exception):
    pass


class _DomainFalse(Exception):
    """A check ran and failed."""


def _fixtures():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FixtureCheckWarning)
        return load_fixtures()


def _load(arg):
    """Resolve an input argument to a domain object."""
    if arg is None or arg == "-":
        text = sys.stdin.read()
    else:
        fs = _fixtures()
        if arg in fs.names():
            f = fs[arg]
            if isinstance(f, BandFixture):
                return f.group_brep()
            if isinstance(f, BranchFixture):
                return f.branch
            return f.poly
        path = Path(arg)
        text = path.read_text() if path.is_file() else arg
    return parse_any(text)


def _expect(obj, *types):
    if not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise _Usage(f"expected {names}, got {type(obj).__name__}")
    return obj


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# braid

def _cmd_braid_info(args):
    b = _expect(_load(args.input), BraidWord, BandRepresentation)
    if isinstance(b, BandRepresentation):
        b = b.braid()
    inv = closure_invariants(b)
    payload = {
        "braid": to_json(b),
        "exponent_sum": inv.exponent_sum,
        "permutation": list(permutation(b).images),
        "components": inv.components,
        "cycle_type": list(inv.cycle_type),
        "linking": [list(map(int, row)) for row in inv.pairwise_linking],
        "self_windings": list(inv.self_windings) if inv.self_windings is not None else None,
    }
    lines = [
        str(b),
        f"exponent sum: {inv.exponent_sum}",
        f"permutation: {' '.join(map(str, permutation(b).images))}",
        f"components: {inv.components}",
        f"linking: {payload['linking']}",
    ]
    if inv.self_windings is not None:
        lines.append(f"self-windings: {list(inv.self_windings)}")
        try:
            g = fiber_genus(b.strands, exponent_sum(b), inv.components)
            payload["fiber_genus"] = g
            lines.append(f"fiber genus: {g}")
        except CurveBraidsError:
            pass
    _emit(args, "\n".join(lines), payload)


def _cmd_braid_equal(args):
    a = _expect(_load(args.a), BraidWord, BandRepresentation)
    b = _expect(_load(args.b), BraidWord, BandRepresentation)
    a = a.braid() if isinstance(a, BandRepresentation) else a
    b = b.braid() if isinstance(b, BandRepresentation) else b
    eq = braids_equal(a, b)
    _emit(args, f"equal: {str(eq).lower()}", {"equal": eq})


def _cmd_braid_act(args):
    w = _expect(_load(args.word), FreeWord)
    b = _expect(_load(args.braid), BraidWord)
    out = act(w, b)
    _emit(args, str(out), to_json(out))


# branch

def _cmd_branch_analyze(args):
    b = _expect(_load(args.input), BranchParam)
    c = cable_cascade(b, validate=args.validate)
    word = cascade_braid(c)
    payload = {
        "branch": to_json(b),
        "g_sequence": g_sequence(b),
        "cascade": [list(pq) for pq in c.pairs],
        "braid": to_json(word),
        "milnor_number": milnor_number(b),
        "genus": branch_genus(b),
    }
    text = "\n".join(
        [
            str(b),
            f"g-sequence: {' '.join(map(str, payload['g_sequence']))}",
            f"cascade: {[tuple(pq) for pq in c.pairs]}",
            f"braid: {word}",
            f"mu: {payload['milnor_number']}",
            f"genus: {payload['genus']}",
        ]
    )
    _emit(args, text, payload)


# monodromy

def _diagnostics(t):
    inv = closure_invariants(t.word)
    return {
        "braid": to_json(t.word),
        "samples": t.samples,
        "min_separation": t.min_separation,
        "radius": t.radius,
        "theta": t.theta,
        "source": t.source,
        "root_permutation": list(t.root_permutation.images),
        "warnings": list(t.warnings),
        "battery": {
            "exponent_sum": inv.exponent_sum,
            "components": inv.components,
            "linking": list(inv.linking_multiset()),
            "self_windings": list(inv.self_windings) if inv.self_windings is not None else None,
        },
    }


def _emit_tracked(args, t):
    diag = _diagnostics(t)
    if args.json:
        print(json.dumps(diag, sort_keys=True))
    else:
        print(str(t.word))
        print(json.dumps(diag, sort_keys=True, indent=1))


def _cmd_monodromy_param(args):
    b = _expect(_load(args.input), BranchParam)
    t = track_parametric(b, eps=args.eps, theta=args.theta, samples=args.samples, tol=args.tol)
    _emit_tracked(args, t)


def _cmd_monodromy_poly(args):
    f = _expect(_load(args.input), PolyCurve)
    t = track_polynomial(f, eps=args.eps, theta=args.theta, samples=args.samples, tol=args.tol)
    _emit_tracked(args, t)


# group

def _presentation(arg) -> GroupPresentation:
    return _expect(_load(arg), GroupPresentation)


def _cmd_group_from_bands(args):
    r = _expect(_load(args.input), BandRepresentation)
    if args.projective:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", NotDeltaSquaredWarning)
            p = projective_presentation(r)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    else:
        p = bidisk_presentation(r)
    _emit(args, str(p), to_json(p))


def _cmd_group_simplify(args):
    p = _presentation(args.input)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BudgetExceededWarning)
        s = tietze_simplify(p, budget=args.budget)
    _emit(args, str(s), to_json(s))
    if caught:
        print(f"warning: {caught[0].message}", file=sys.stderr)
        raise _Exceeded


def _cmd_group_abelianize(args):
    ab = abelianization(_presentation(args.input))
    _emit(args, str(ab), to_json(ab))


def _cmd_group_order(args):
    res = coset_enumerate(_presentation(args.input), args.max_cosets)
    payload = {"order": res.order, "exceeded": res.exceeded, "cosets_defined": res.cosets_defined}
    _emit(args, f"order: {res}", payload)
    if res.exceeded:
        raise _Exceeded


def _cmd_group_homs(args):
    p = _presentation(args.input)
    count = count_homs_to_symmetric(p, args.sym)
    _emit(args, f"homs to S{args.sym}: {count}", {"sym": args.sym, "count": count})


# delta2

def _cmd_delta2_verify(args):
    fs = None
    if args.fixture:
        fs = _fixtures()
        if args.fixture not in fs.bands:
            raise _Usage(f"no band fixture named {args.fixture!r}")
        f = fs.bands[args.fixture]
        brep, product = f.brep, f.product
    else:
        brep, product = _expect(_load(args.input), BandRepresentation), "delta2"
    if args.n is not None and args.n != brep.strands:
        raise _Usage(f"--n {args.n} does not match the {brep.strands} strands of the input")
    target = delta_squared(brep.strands) if product == "delta2" else delta(brep.strands)
    eq = braids_equal(brep.braid(), target)
    _emit(
        args,
        f"equal: {str(eq).lower()}",
        {"equal": eq, "strands": brep.strands, "target": product, "bands": format_brep(brep)},
    )
    if not eq:
        raise _DomainFalse


def _cmd_delta2_word(args):
    w = delta_squared(args.n, form=args.form)
    _emit(args, str(w), to_json(w))


# fixtures

def _cmd_fixtures_selftest(args):
    if args.dir is not None:
        d = Path(args.dir)
        if not d.is_dir() or not any(d.glob("*.json")):
            raise _Usage(f"no fixture files in {d}")
    results = fixtures_selftest(args.dir)
    payload = [{"name": r.name, "ok": r.ok, "failures": list(r.failures)} for r in results]
    _emit(args, "\n".join(str(r) for r in results), {"results": payload})
    if not all(r.ok for r in results):
        raise _DomainFalse


def _cmd_fixtures_list(args):
    fs = _fixtures()
    rows = []
    for name in fs.names():
        f = fs[name]
        kind = {BandFixture: "bands", BranchFixture: "branch", PolyFixture: "poly"}[type(f)]
        rows.append({"name": name, "kind": kind})
    _emit(args, "\n".join(f"{r['name']}\t{r['kind']}" for r in rows), {"fixtures": rows})


def _cmd_fixtures_show(args):
    fs = _fixtures()
    if args.name not in fs.names():
        raise _Usage(f"no fixture named {args.name!r}")
    f = fs[args.name]
    obj = f.brep if isinstance(f, BandFixture) else (f.branch if isinstance(f, BranchFixture) else f.poly)
    text = format_brep(obj) if isinstance(obj, BandRepresentation) else str(obj)
    if isinstance(obj, PolyCurve):
        text = json.dumps(to_json(obj), sort_keys=True)
    _emit(args, text, to_json(obj))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="curvebraids", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="command", required=True)

    def group(name, help_):
        p = top.add_parser(name, help=help_)
        return p.add_subparsers(dest="action", required=True)

    braid = group("braid", "braid words")
    p = braid.add_parser("info", parents=[common], help="closure invariants")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=_cmd_braid_info)
    p = braid.add_parser("equal", parents=[common], help="word problem")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_braid_equal)
    p = braid.add_parser("act", parents=[common], help="right action on a free word")
    p.add_argument("word")
    p.add_argument("braid")
    p.set_defaults(func=_cmd_braid_act)

    branch = group("branch", "singular branches")
    p = branch.add_parser("analyze", parents=[common], help="cascade, braid, Milnor number, genus")
    p.add_argument("input", nargs="?")
    p.add_argument("--validate", action="store_true", help="compare with the numerical oracle")
    p.set_defaults(func=_cmd_branch_analyze)

    mono = group("monodromy", "numerical braid monodromy")
    for name, func, eps in (("param", _cmd_monodromy_param, None), ("poly", _cmd_monodromy_poly, 0.5)):
        p = mono.add_parser(name, parents=[common])
        p.add_argument("input", nargs="?")
        p.add_argument("--eps", type=float, default=eps)
        p.add_argument("--theta", type=float)
        p.add_argument("--samples", type=int)
        p.add_argument("--tol", type=float)
        p.set_defaults(func=func)

    grp = group("group", "group presentations")
    p = grp.add_parser("from-bands", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--projective", action="store_true", help="add the relation at infinity")
    p.set_defaults(func=_cmd_group_from_bands)
    p = grp.add_parser("simplify", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_group_simplify)
    p = grp.add_parser("abelianize", parents=[common])
    p.add_argument("input", nargs="?")
    p.set_defaults(func=_cmd_group_abelianize)
    p = grp.add_parser("order", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--max-cosets", type=int, default=None)
    p.set_defaults(func=_cmd_group_order)
    p = grp.add_parser("homs", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--sym", type=int, required=True, choices=range(1, 6), metavar="K")
    p.set_defaults(func=_cmd_group_homs)

    d2 = group("delta2", "the full twist")
    p = d2.add_parser("verify", parents=[common])
    p.add_argument("input", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--fixture")
    p.set_defaults(func=_cmd_delta2_verify)
    p = d2.add_parser("word", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", choices=("power", "pure-product"), default="power")
    p.set_defaults(func=_cmd_delta2_word)

    fx = group("fixtures", "bundled regression data")
    p = fx.add_parser("selftest", parents=[common])
    p.add_argument("--dir")
    p.set_defaults(func=_cmd_fixtures_selftest)
    p = fx.add_parser("list", parents=[common])
    p.set_defaults(func=_cmd_fixtures_list)
    p = fx.add_parser("show", parents=[common])
    p.add_argument("name")
    p.set_defaults(func=_cmd_fixtures_show)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except _DomainFalse:
        return DOMAIN
    except _Exceeded:
        return EXCEEDED
    except SearchCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXCEEDED
    except (_Usage, FormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (CurveBraidsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN
    return OK


if __name__ == "__main__":
    sys.exit(main())
