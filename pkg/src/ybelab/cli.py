"""Command-line front end.

    ybelab check <identity> --algebra PATH [--map NAME] [--tensor NAME] ...
    ybelab construct <name> --algebra PATH ...
    ybelab search <predicate> --algebra PATH --field F3 [--skew | --symmetric]
    ybelab verify <theorem> [--dimA N] [--dimV M] [--exhaustive | --trials N --seed S]
    ybelab fixtures [NAME] [--out DIR]

Exit status: 0 when every requested check passes, 1 when one fails,
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .algebra import (
    Algebra,
    Bimodule,
    BimoduleAlgebra,
    InvalidStructure,
    ShapeError,
    dual_bimodule,
    regular_bimodule,
    regular_bimodule_algebra,
    semidirect_sum,
    validate_algebra,
    validate_bimodule,
    validate_bimodule_algebra,
)
from .bundle import (
    BundleError,
    Bundle,
    MapEntry,
    TensorEntry,
    bundle_for,
    emit_bundle,
    load_bundle,
    parse_bundle,
    write_bundle,
)
from .double import DoubleContext
from .field import QQ, Field, FieldError
from .fixtures import FIXTURES, fixture
from .frobenius import BilinearForm, DegenerateForm, validate_frobenius
from .operators import (
    GateError,
    OperatorContext,
    balanced_residual,
    extended_o_residual,
    o_operator_residual,
    rota_baxter_residual,
    star_product,
)
from .report import Check, Report, residual_check
from .search import PREDICATES, BudgetExceeded, Predicate, SearchSpace, UnknownPredicate, search
from .tensors import (
    aayb_residual,
    aguiar_map,
    aybe_residual,
    dual_product,
    eaybe_residual,
    gaybe_residual,
    operator_form_residual,
)
from .verify import VERIFIERS, VerifyOptions, default_algebras, run_verifier

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


# --- rendering ----------------------------------------------------------------


def _coeff(f: Field, x, first: bool) -> str:
    """Sign and coefficient prefix for one term of a sum."""
    v = f.format(x)
    s = str(v)
    neg = s.startswith("-")
    mag = s[1:] if neg else s
    sign = ("-" if neg else "") if first else (" - " if neg else " + ")
    return sign + ("" if mag == "1" else mag + " ")


def render_tensor(A: Algebra, t) -> str:
    f = A.field
    out = []
    for (i, j), x in np.ndenumerate(t):
        if x != 0:
            out.append(_coeff(f, x, not out) + f"{A.label(i)}⊗{A.label(j)}")
    return "".join(out) or "0"


def render_map(labels_src, labels_tgt, f: Field, M) -> str:
    lines = []
    for j, src in enumerate(labels_src):
        terms = []
        for i, tgt in enumerate(labels_tgt):
            if M[i, j] != 0:
                terms.append(_coeff(f, M[i, j], not terms) + tgt)
        lines.append(f"  {src} -> {''.join(terms) or '0'}")
    return "\n".join(lines)


# --- inputs ---------------------------------------------------------------------


def _read(path_or_name: str, field: Field | None) -> Bundle:
    """A bundle from a JSON file, or a built-in fixture by name; ``field`` reinterprets scalars."""
    p = Path(path_or_name)
    if p.exists():
        if field is None:
            return load_bundle(p)
        try:
            data = json.loads(p.read_text())
        except json.JSONDecodeError as exc:
            raise BundleError(f"{p}:{exc.lineno}:{exc.colno}", f"invalid JSON: {exc.msg}") from None
        if isinstance(data, dict):
            data = {**data, "field": field.label}
        return parse_bundle(data)
    if path_or_name.lower() in FIXTURES:
        return bundle_for(fixture(path_or_name, field or QQ))
    raise BundleError(str(path_or_name), "no such file or fixture")


def _scalar(f: Field, text: str, what: str):
    try:
        return f.scalar(text)
    except FieldError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _mass(f: Field, text: str | None):
    if not text:
        return f.scalar(0), f.scalar(0)
    parts = text.split(",")
    if len(parts) > 2:
        raise UsageError("--mass takes kappa or kappa,mu")
    kappa = _scalar(f, parts[0], "--mass")
    mu = _scalar(f, parts[1], "--mass") if len(parts) == 2 else f.scalar(0)
    return kappa, mu


def _algebra_of(b: Bundle, name: str) -> Algebra:
    base = name[:-1] if name.endswith("*") else name
    if base in b.algebras:
        return b.algebras[base]
    if base in b.bimodules:
        return b.bimodules[base].algebra
    raise BundleError(name, "unknown space")


def _module_space(b: Bundle, name: str) -> Bimodule:
    """The bimodule a map's source names: an algebra (regular, with its product),
    ``alg*`` (the dual of the regular bimodule) or a named bimodule."""
    if name.endswith("*"):
        base = name[:-1]
        if base in b.algebras:
            return dual_bimodule(regular_bimodule(b.algebras[base]))
        return dual_bimodule(b.get("bimodules", base))
    if name in b.algebras:
        return regular_bimodule_algebra(b.algebras[name])
    return b.get("bimodules", name)


def _pick(b: Bundle, section: str, name: str | None):
    table = getattr(b, section)
    if name is None:
        if len(table) != 1:
            raise UsageError(f"bundle has {len(table)} {section}; name one with the matching flag")
        return next(iter(table.items()))
    return name, b.get(section, name)


def _pick_algebra(b: Bundle, args) -> tuple[str, Algebra]:
    return _pick(b, "algebras", getattr(args, "algebra_name", None))


def _context(b: Bundle, args, entry: MapEntry) -> OperatorContext:
    f = b.field
    R = _module_space(b, args.bimodule or entry.source)
    A = _algebra_of(b, entry.target)
    if R.algebra.dim != A.dim:
        raise UsageError("map target is not the algebra acting on its source")
    kappa, mu = _mass(f, args.mass)
    lam = _scalar(f, args.weight or "0", "--weight")
    return OperatorContext(A, R, lam, kappa, mu, check=False)


# --- check --------------------------------------------------------------------


CHECKS = {
    "bundle": "validate every object in the bundle",
    "algebra": "associativity",
    "bimodule": "bimodule axioms (and bimodule algebra axioms when a product is given)",
    "frobenius": "nondegenerate invariant form (--form, --symmetric to require symmetry)",
    "eq:rbo": "Rota-Baxter identity of weight --weight for --map",
    "eq:aop": "O-operator identity of weight --weight for --map from a bimodule",
    "eq:gmybe": "extended O-operator identity for --map with modification --beta, mass --mass",
    "balanced": "--beta is balanced (and a bimodule homomorphism) at mass --mass",
    "eq:aybe": "associative Yang-Baxter equation for --tensor",
    "eq:aayb": "opposite-order Yang-Baxter equation for --tensor",
    "eq:type2aybe": "extended Yang-Baxter equation of mass --eaybe-mass for --tensor",
    "eq:maybe": "generalized Yang-Baxter equation for --tensor",
    "eq:aybeform": "operator form of the Yang-Baxter equation for --tensor",
}


def _tensor(b: Bundle, args) -> tuple[Algebra, np.ndarray]:
    _, entry = _pick(b, "tensors", args.tensor)
    return b.algebras[entry.algebra], entry.t


def _map(b: Bundle, args, name=None) -> MapEntry:
    _, entry = _pick(b, "maps", name or args.map)
    return entry


def run_check(target: str, b: Bundle, args) -> Report:
    f = b.field
    if target == "bundle":
        checks = []
        for name, A in b.algebras.items():
            checks += [Check(f"{name}:{c.id}", c.passed, c.witness, c.residual) for c in validate_algebra(A).checks]
        for name, V in b.bimodules.items():
            A = V.algebra
            rep = validate_bimodule_algebra(A, V) if isinstance(V, BimoduleAlgebra) else validate_bimodule(A, V)
            checks += [Check(f"{name}:{c.id}", c.passed, c.witness, c.residual) for c in rep.checks]
        for name, B in b.forms.items():
            checks += [Check(f"{name}:{c.id}", c.passed, c.witness, c.residual, c.detail) for c in validate_frobenius(B.algebra, B).checks]
        return Report(tuple(checks))
    if target == "algebra":
        _, A = _pick_algebra(b, args)
        return validate_algebra(A)
    if target == "bimodule":
        _, V = _pick(b, "bimodules", args.bimodule)
        if isinstance(V, BimoduleAlgebra):
            return validate_bimodule_algebra(V.algebra, V)
        return validate_bimodule(V.algebra, V)
    if target == "frobenius":
        _, B = _pick(b, "forms", args.form)
        return validate_frobenius(B.algebra, B, require_symmetric=args.symmetric)
    if target == "eq:rbo":
        entry = _map(b, args)
        if entry.source != entry.target or entry.source not in b.algebras:
            raise UsageError("eq:rbo needs an endomorphism of an algebra")
        return rota_baxter_residual(b.algebras[entry.source], entry.matrix, _scalar(f, args.weight or "0", "--weight"))
    if target == "eq:aop":
        entry = _map(b, args)
        return o_operator_residual(_context(b, args, entry), entry.matrix)
    if target == "eq:gmybe":
        entry = _map(b, args)
        ctx = _context(b, args, entry)
        beta = _map(b, args, args.beta)
        gate = None if args.gate == "none" else args.gate
        return extended_o_residual(ctx, entry.matrix, beta.matrix, gate=gate)
    if target == "balanced":
        beta = _map(b, args, args.beta)
        return balanced_residual(_context(b, args, beta), beta.matrix, check_hom=args.gate != "balanced")
    if target in ("eq:aybe", "eq:aayb", "eq:type2aybe", "eq:maybe"):
        A, t = _tensor(b, args)
        if target == "eq:aybe":
            arr = aybe_residual(A, t)
        elif target == "eq:aayb":
            arr = aayb_residual(A, t)
        elif target == "eq:maybe":
            arr = gaybe_residual(A, t)
        else:
            if args.eaybe_mass is None:
                raise UsageError("eq:type2aybe needs --eaybe-mass")
            arr = eaybe_residual(A, t, _scalar(f, args.eaybe_mass, "--eaybe-mass"))
        return Report((residual_check(target, arr, 3),))
    if target == "eq:aybeform":
        A, t = _tensor(b, args)
        return operator_form_residual(A, t)
    raise UsageError(f"unknown check {target!r}; known: {', '.join(CHECKS)}")


# --- construct ----------------------------------------------------------------


CONSTRUCTIONS = {
    "dual": "the dual bimodule of --bimodule (or of the regular bimodule)",
    "semidirect": "the semidirect sum of the algebra and --bimodule",
    "double": "the algebra |x V* of the algebra and --bimodule (regular if omitted)",
    "opposite": "the opposite algebra",
    "aguiar": "the operator x -> sum t_ij e_i x e_j of --tensor",
    "dual-product": "the product on A* induced by --tensor",
    "star": "the product *_alpha on the source of --map (weight --weight)",
}


def run_construct(target: str, b: Bundle, args) -> Bundle:
    f = b.field
    out = Bundle(f)
    if target in ("dual", "semidirect", "double"):
        name, A = _pick_algebra(b, args)
        vname = args.bimodule
        V = b.get("bimodules", vname) if vname else regular_bimodule(A)
        vname = vname or f"{name}_reg"
        out.algebras[name] = A
        if target == "dual":
            out.bimodules[vname + "_dual"] = dual_bimodule(V)
            out.module_base[vname + "_dual"] = name
        elif target == "semidirect":
            out.algebras[f"{name}_x_{vname}"] = semidirect_sum(A, V)
        else:
            out.algebras[f"{name}_x_{vname}_dual"] = DoubleContext(A, V).hat
        return out
    if target == "opposite":
        name, A = _pick_algebra(b, args)
        out.algebras[name + "_op"] = A.opposite()
        return out
    if target in ("aguiar", "dual-product"):
        tname, entry = _pick(b, "tensors", args.tensor)
        A = b.algebras[entry.algebra]
        out.algebras[entry.algebra] = A
        if target == "aguiar":
            out.maps[f"P_{tname}"] = MapEntry(entry.algebra, entry.algebra, aguiar_map(A, entry.t))
        else:
            out.algebras[f"{entry.algebra}_dual_{tname}"] = Algebra(f, dual_product(A, entry.t).table)
        return out
    if target == "star":
        mname, entry = _pick(b, "maps", args.map)
        ctx = _context(b, args, entry)
        out.algebras[f"star_{mname}"] = Algebra(f, star_product(ctx, entry.matrix).table)
        return out
    raise UsageError(f"unknown construction {target!r}; known: {', '.join(CONSTRUCTIONS)}")


# --- search -------------------------------------------------------------------


SEARCHES = {
    "aybe": "tensors solving the associative Yang-Baxter equation",
    "aayb": "tensors solving the opposite-order equation",
    "eaybe": "tensors solving the extended equation of mass --eaybe-mass",
    "gaybe": "tensors solving the generalized equation",
    "operator_form": "tensors whose map A* -> A satisfies the operator form",
    "dual_assoc": "tensors whose induced product on A* is associative",
    "rb": "Rota-Baxter operators of weight --weight",
    "o_op": "O-operators from --bimodule (default: the algebra itself), weight and mass flags",
    "ext_o": "extended O-operators with modification --beta (gated)",
    "aybe_hom_form": "AYBE solutions in a double supported on the off-diagonal blocks",
}


def run_search(target: str, b: Bundle, args):
    f = b.field
    if f.is_rational:
        raise UsageError("search needs a prime field (use --field Fp)")
    if target not in PREDICATES:
        raise UnknownPredicate(f"unknown predicate {target!r}; known: {', '.join(sorted(PREDICATES))}")
    symmetry = "skew" if args.skew else "symmetric" if args.symmetric else None
    params = {}
    if args.weight is not None:
        params["lam"] = _scalar(f, args.weight, "--weight")
    if args.mass:
        params["kappa"], params["mu"] = _mass(f, args.mass)
    if args.eaybe_mass is not None:
        params["eps"] = _scalar(f, args.eaybe_mass, "--eaybe-mass")
    if target == "eaybe" and "eps" not in params:
        raise UsageError("eaybe needs --eaybe-mass")
    name, A = _pick_algebra(b, args)
    if target in ("o_op", "ext_o"):
        module = b.get("bimodules", args.bimodule) if args.bimodule else None
        beta = _map(b, args, args.beta).matrix if target == "ext_o" else None
        if target == "ext_o" and beta is None:
            raise UsageError("ext_o needs --beta")
        m = module.dim if module is not None else A.dim
        pred = Predicate(target, A, params, module, beta)
        space = SearchSpace(f, (A.dim, m), symmetry, kind="map")
    else:
        kind = "map" if target == "rb" else "tensor"
        pred = Predicate(target, A, params)
        space = SearchSpace(f, (A.dim, A.dim), symmetry, kind=kind)
    return A, search(space, pred, workers=args.workers)


# --- fixtures -----------------------------------------------------------------


def fixture_bundles(f: Field = QQ) -> dict[str, Bundle]:
    """The bundles shipped in ``fixtures/``."""
    out = {}
    for name in FIXTURES:
        out[name] = bundle_for(fixture(name, f))
    nil2 = out["nil2"]
    nil2.maps["P0"] = MapEntry("nil2", "nil2", f.zeros(2, 2))
    nil2.maps["id"] = MapEntry("nil2", "nil2", f.identity(2))
    A = nil2.algebras["nil2"]
    nil2.bimodules["reg"] = regular_bimodule(A)
    nil2.module_base["reg"] = "nil2"
    ut2 = out["ut2"]
    t = f.zeros(3, 3)
    t[0, 1], t[1, 0] = f.scalar(1), f.scalar(-1)
    ut2.tensors["r_flag"] = TensorEntry("ut2", t)
    dn = out["dualnum"]
    dn.forms["trace"] = BilinearForm(dn.algebras["dualnum"], [[0, 1], [1, 0]])
    dn.form_base["trace"] = "dualnum"
    return out


def run_fixtures(target: str | None, args) -> int:
    f = Field.parse(args.field) if args.field else QQ
    bundles = fixture_bundles(f)
    if target:
        if target not in bundles:
            raise UsageError(f"unknown fixture {target!r}; known: {', '.join(bundles)}")
        bundles = {target: bundles[target]}
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, b in bundles.items():
            write_bundle(b, outdir / f"{name}.json")
            print(outdir / f"{name}.json")
    elif target:
        sys.stdout.write(emit_bundle(bundles[target]))
    else:
        for name, b in bundles.items():
            A = next(iter(b.algebras.values()))
            print(f"{name}  dim {A.dim}")
    return EXIT_PASS


# --- driver -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ybelab", description="exact checks for Rota-Baxter operators, O-operators and Yang-Baxter equations")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, needs_algebra=True):
        sp.add_argument("--algebra", required=needs_algebra, help="bundle path or built-in fixture name")
        sp.add_argument("--algebra-name", help="algebra within the bundle")
        sp.add_argument("--field", help="Q, F<p>, Fp:<p> or GF(<p>); reinterprets bundle scalars")
        sp.add_argument("--json", action="store_true")

    def operator_flags(sp):
        sp.add_argument("--bimodule")
        sp.add_argument("--map")
        sp.add_argument("--beta", help="map used as the modification")
        sp.add_argument("--tensor")
        sp.add_argument("--form")
        sp.add_argument("--weight")
        sp.add_argument("--mass", help="kappa or kappa,mu")
        sp.add_argument("--eaybe-mass")

    sp = sub.add_parser("check", help="evaluate one identity on bundle data")
    sp.add_argument("target", nargs="?")
    common(sp, needs_algebra=False)
    operator_flags(sp)
    sp.add_argument("--gate", choices=("hom", "balanced", "none"), default="hom")
    sp.add_argument("--symmetric", action="store_true")
    sp.add_argument("--list", action="store_true")

    sp = sub.add_parser("construct", help="build a derived structure and emit it as a bundle")
    sp.add_argument("target", nargs="?")
    common(sp, needs_algebra=False)
    operator_flags(sp)
    sp.add_argument("--out")
    sp.add_argument("--list", action="store_true")

    sp = sub.add_parser("search", help="enumerate all solutions over a prime field")
    sp.add_argument("target", nargs="?")
    common(sp, needs_algebra=False)
    operator_flags(sp)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--skew", action="store_true")
    g.add_argument("--symmetric", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--list", action="store_true")

    sp = sub.add_parser("verify", help="check a theorem over many instances")
    sp.add_argument("target", nargs="?")
    common(sp, needs_algebra=False)
    sp.add_argument("--dimA", type=int)
    sp.add_argument("--dimV", type=int)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--list", action="store_true")

    sp = sub.add_parser("fixtures", help="list or write the built-in fixture bundles")
    sp.add_argument("target", nargs="?")
    sp.add_argument("--field")
    sp.add_argument("--out")
    return p


def _list(table: dict) -> int:
    width = max(map(len, table))
    for k, v in table.items():
        print(f"{k:<{width}}  {v}")
    return EXIT_PASS


def _emit_report(verb, target, f: Field, rep: Report, as_json: bool, header: str = "") -> int:
    if as_json:
        print(json.dumps({"verb": verb, "target": target, "field": f.label, **rep.to_json(f)}, sort_keys=True))
    else:
        if header:
            print(header)
        print(rep.render())
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _verify(args) -> int:
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be positive")
    if args.algebra:
        b = _read(args.algebra, Field.parse(args.field) if args.field else None)
        f = b.field
        algebras = tuple(b.algebras.items())
        forms = tuple(b.forms.items())
        if args.dimA:
            algebras = tuple((n, A) for n, A in algebras if A.dim == args.dimA)
    else:
        f = Field.parse(args.field) if args.field else Field(3)
        algebras = default_algebras(f, args.dimA)
        forms = ()
    exhaustive = args.trials is None
    if exhaustive and f.is_rational:
        raise UsageError("exhaustive verification needs a prime field; use --trials over Q")
    opts = VerifyOptions(f, algebras, args.dimV, exhaustive, args.trials or 0, args.seed, args.workers, forms)
    rep = run_verifier(args.target, opts)
    mode = "exhaustive" if exhaustive else f"{args.trials} trials, seed {args.seed}"
    header = f"{args.target} over {f} ({mode}; algebras: {', '.join(n for n, _ in algebras)})"
    return _emit_report("verify", args.target, f, rep, args.json, header)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.verb == "fixtures":
            return run_fixtures(args.target, args)
        tables = {"check": CHECKS, "construct": CONSTRUCTIONS, "search": SEARCHES,
                  "verify": {k: d for k, (d, _) in VERIFIERS.items()}}
        if args.list:
            return _list(tables[args.verb])
        if not args.target:
            raise UsageError(f"{args.verb} needs a target (see --list)")
        if args.target not in tables[args.verb]:
            raise UsageError(f"unknown {args.verb} target {args.target!r} (see --list)")
        if args.verb == "verify":
            return _verify(args)
        if not args.algebra:
            raise UsageError(f"{args.verb} needs --algebra")
        b = _read(args.algebra, Field.parse(args.field) if args.field else None)
        if args.verb == "check":
            return _emit_report("check", args.target, b.field, run_check(args.target, b, args), args.json)
        if args.verb == "construct":
            out = run_construct(args.target, b, args)
            if args.out:
                write_bundle(out, args.out)
            else:
                sys.stdout.write(emit_bundle(out))
            return EXIT_PASS
        A, sols = run_search(args.target, b, args)
        if args.json:
            print(sols.dumps())
        else:
            print(f"{sols.predicate} over {b.field}: {sols.count} solutions of {sols.space.count} candidates")
            for arr in sols.arrays():
                if sols.space.kind == "tensor":
                    print("  " + render_tensor(A, arr))
                else:
                    src = [f"v{j + 1}" for j in range(arr.shape[1])] if arr.shape[1] != A.dim else [A.label(j) for j in range(A.dim)]
                    print(render_map(src, [A.label(i) for i in range(A.dim)], b.field, arr))
                    print("  --")
        return EXIT_PASS
    except (GateError, InvalidStructure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, BundleError, FieldError, ShapeError, KeyError, BudgetExceeded, DegenerateForm, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
