"""Command line front end.

Verbs: build, verify, dims, branch, patterns, yangian-demo, export.  The
algebra argument is "gl", "sp" or "soN" (orthogonal algebras carry their
matrix size, e.g. so5); weights are comma lists with half-integers written
as p/2.  Exit codes: 0 success, 2 usage/parse errors, 3 refusals (size
caps or theorem hypotheses), 1 failed verification.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import branching, gln, patterns, yangian
from .liealg_bcd import (DeskScaleError, OrthogonalChain, build_bcd_irrep,
                         fnn_action_check, gt_basis_checks, orth_basis_checks)

SCHEMA = "gt-export/1"


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def parse_weight(text):
    """Comma list of integers or halves ("p/2") into doubled integers."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise CliError("empty weight entry in %r" % text, 2)
        try:
            f = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise CliError("cannot parse weight entry %r" % tok, 2)
        d = f * 2
        if d.denominator != 1:
            raise CliError("weight entries must be integers or halves: %r" % tok, 2)
        out.append(int(d))
    return tuple(out)


def format_weight(doubled):
    toks = []
    for d in doubled:
        toks.append(str(d // 2) if d % 2 == 0 else "%d/2" % d)
    return ",".join(toks)


def parse_algebra(token, nentries, convention, series=None):
    """Returns (kind, data): ("gl", n) | ("sp", n) | ("so", N).

    A --series hint, when given, must agree with the positional token.
    """
    token = token.lower()
    if series and not token.startswith(series):
        raise CliError("--series %s contradicts algebra %r" % (series, token), 2)
    if token == "gl":
        return ("gl", nentries)
    if token.startswith("gl") and token[2:].isdigit():
        n = int(token[2:])
        if n != nentries:
            raise CliError("gl%d needs %d weight entries" % (n, n), 2)
        return ("gl", n)
    if token == "sp":
        return ("sp", nentries)
    if token.startswith("sp") and token[2:].isdigit():
        size = int(token[2:])
        if size % 2 or size // 2 != nentries:
            raise CliError("sp%d needs %d weight entries" % (size, size // 2), 2)
        return ("sp", size // 2)
    if token.startswith("so") and token[2:].isdigit():
        size = int(token[2:])
        if size // 2 != nentries:
            raise CliError("so%d needs %d weight entries" % (size, size // 2), 2)
        return ("so", size)
    if token == "so":
        raise CliError("orthogonal algebras need an explicit size, e.g. so5", 2)
    raise CliError("unknown algebra %r" % token, 2)


def _series_of(kind, size):
    if kind == "sp":
        return "C"
    return "B" if size % 2 else "D"


def _family(kind, size, convention):
    if kind == "gl":
        return "A"
    if kind == "sp":
        return "C3"
    series = _series_of(kind, size)
    if convention == "s4":
        return series + "4"
    return series + "3"


def _dimension(kind, data, lam, convention):
    if kind == "gl":
        cnt = len(patterns.enumerate_patterns("A", lam))
        oracle = branching.weyl_dim("A", lam)
    else:
        series = _series_of(kind, data if kind == "sp" else data)
        if kind == "sp":
            series = "C"
        fam = _family(kind, data, convention)
        cnt = len(patterns.enumerate_patterns(fam, lam))
        if convention == "s4":
            oracle = branching.weyl_dim(series, lam)
        else:
            oracle = branching.weyl_dim_s3(series, lam)
    if cnt != oracle:
        raise AssertionError("pattern count %d != Weyl dimension %d" % (cnt, oracle))
    return cnt


def cmd_dims(args):
    lam = parse_weight(args.weight)
    kind, data = parse_algebra(args.algebra, len(lam), args.convention, args.series)
    print(_dimension(kind, data, lam, args.convention))
    return 0


def cmd_patterns(args):
    lam = parse_weight(args.weight)
    kind, data = parse_algebra(args.algebra, len(lam), args.convention, args.series)
    fam = _family(kind, data, args.convention)
    for p in patterns.enumerate_patterns(fam, lam):
        print(json.dumps(patterns.to_json(p), sort_keys=True))
    return 0


def cmd_branch(args):
    lam = parse_weight(args.weight)
    kind, data = parse_algebra(args.algebra, len(lam), args.convention, args.series)
    if kind == "gl":
        for mu in branching.branch_A(lam):
            print("%s  1" % format_weight(mu))
        return 0
    if args.convention == "s4":
        raise CliError("branch tables are emitted in the s3 convention", 2)
    series = _series_of(kind, data)
    for mu, spec in branching.branch_children_BCD(series, lam):
        print("%s  %d" % (format_weight(mu), spec.multiplicity))
    return 0


def _build(kind, data, lam, convention, max_dim):
    if kind == "gl":
        return gln.build_irrep(len(lam), lam)
    if kind == "sp":
        return build_bcd_irrep("C", lam, max_dim=max_dim)
    if convention == "s4":
        return OrthogonalChain(data, lam, max_dim=max_dim)
    return build_bcd_irrep(_series_of(kind, data), lam, max_dim=max_dim)


def export_dict(kind, data, lam, convention, rep):
    if kind == "gl":
        out = gln.export_json(rep)
    else:
        alg_name = "sp" if kind == "sp" else "so"
        if convention == "s4":
            fam = _family(kind, data, convention)
            gens = {}
            n = rep.n
            for i in range(1, rep.N + 1):
                for j in range(1, rep.N + 1):
                    m = rep.module.realize(rep._fdef(i, j))
                    if not m.is_zero():
                        gens["F_%d_%d" % (i, j)] = _entries(m)
            out = {
                "algebra": alg_name, "n": n, "lambda": list(lam),
                "dim": rep.dim, "convention": "s4",
                "patterns": [patterns.to_json(p)
                             for p in patterns.enumerate_patterns(fam, lam)],
                "generators": gens,
                "gram": _entries(rep.module.gram_matrix()),
            }
        else:
            alg = rep.algebra
            gens = {}
            for i in alg.indices:
                for j in alg.indices:
                    m = rep.F(i, j)
                    if not m.is_zero():
                        gens["F_%d_%d" % (i, j)] = _entries(m)
            fam = _family(kind, data, convention)
            out = {
                "algebra": alg_name, "n": alg.n, "lambda": list(lam),
                "dim": rep.dim, "convention": "s3",
                "patterns": [patterns.to_json(p)
                             for p in patterns.enumerate_patterns(fam, lam)],
                "generators": gens,
                "gram": _entries(rep.module.gram_matrix()),
            }
    out["schema"] = SCHEMA
    return out


def _entries(m):
    return [[r, c, "%d/%d" % (v.numerator, v.denominator)]
            for (r, c), v in sorted(m.entries.items())]


def load_export(path):
    """Re-parse an exported JSON file into exact matrices."""
    with open(path) as fh:
        data = json.load(fh)
    if data.get("schema") != SCHEMA:
        raise ValueError("unknown schema %r" % data.get("schema"))
    dim = data["dim"]
    mats = {}
    for name, ent in data["generators"].items():
        mats[name] = _mat_from_entries(ent, dim)
    return data, mats


def _mat_from_entries(ent, dim):
    from .exact import SparseMat
    return SparseMat(dim, dim, {(r, c): Fraction(v) for r, c, v in ent})


def cmd_build(args, verb="build"):
    if verb == "export" and not args.json:
        raise CliError("export needs --json PATH", 2)
    lam = parse_weight(args.weight)
    kind, data = parse_algebra(args.algebra, len(lam), args.convention, args.series)
    rep = _build(kind, data, lam, args.convention, args.max_dim)
    dim = rep.dim
    print("algebra: %s" % args.algebra)
    print("lambda: %s" % format_weight(lam))
    print("dim: %d" % dim)
    if args.json:
        payload = export_dict(kind, data, lam, args.convention, rep)
        with open(args.json, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=1)
        print("written: %s" % args.json)
    return 0


def _gl_verify_checks(rep):
    yield "commutation", lambda: gln.commutation_check(rep)
    yield "adjointness", lambda: gln.adjointness_check(rep)
    yield "highest-vector", lambda: gln.highest_vector_check(rep)
    yield "dimension-oracle", lambda: rep.dim == branching.weyl_dim("A", rep.lam)
    yield "lowering-basis", lambda: all(
        v == _unit(rep.dim, t) for t, v in enumerate(gln.basis_via_lowering(rep)))
    yield "capelli-scalar", lambda: gln.capelli_scalar_check(rep)
    yield "capelli-interpolation", lambda: gln.capelli_interpolation_check(rep)
    yield "z-relations", lambda: gln.zrelation_checks(rep)
    yield "tau-equals-z", lambda: all(
        gln.tau_equals_z_check(rep, i) for i in range(1, rep.n))
    yield "drinfeld-actions", lambda: all(
        gln.drinfeld_checks(rep, m) for m in range(1, rep.n + 1))
    yield "kappa-basis", lambda: len(gln.kappa_basis(rep)) == rep.dim
    yield "gt-separation", lambda: len({
        tuple(tuple(r) for r in gln.gt_eigenvalues(p)) for p in rep.basis}) == rep.dim
    yield "characteristic-identity", lambda: gln.characteristic_identity_check(rep)


def _unit(n, t):
    return tuple(Fraction(1) if j == t else Fraction(0) for j in range(n))


def _bcd_verify_checks(rep):
    from .exact import commutator
    from .liealg_bcd import v_plus_mu
    series = rep.algebra.series
    yield "dimension-oracle", lambda: rep.dim == branching.weyl_dim_s3(series, rep.lam)

    def commutation():
        alg = rep.algebra
        pairs = [(i, j) for i in alg.indices for j in alg.indices]
        for (i, j) in pairs:
            for (k, l) in pairs:
                want = rep.module.realize(commutator(alg.fdef(i, j), alg.fdef(k, l)))
                if commutator(rep.F(i, j), rep.F(k, l)) != want:
                    return False
        return True
    yield "commutation", commutation
    yield "gt-basis", lambda: gt_basis_checks(rep)

    def branching_consistency():
        total = 0
        for mu, spec in branching.branch_children_BCD(series, rep.lam):
            if len(v_plus_mu(rep, mu)) != spec.multiplicity:
                return False
            child = "A" if rep.algebra.n == 1 else series
            if rep.algebra.n == 1:
                dim_child = 1
            else:
                dim_child = branching.weyl_dim_s3(series, mu)
            total += spec.multiplicity * dim_child
        return total == rep.dim
    yield "branching-consistency", branching_consistency
    if series == "C":
        def fnn_all():
            for mu, _ in branching.branch_children_BCD(series, rep.lam):
                if not fnn_action_check(rep, mu):
                    return False
            return True
        yield "fnn-action", fnn_all


def _orth_verify_checks(chain):
    series = "B" if chain.N % 2 else "D"
    yield "dimension-oracle", lambda: chain.dim == branching.weyl_dim(series, chain.lam)
    yield "orthogonal-basis", lambda: orth_basis_checks(chain)


def cmd_verify(args):
    lam = parse_weight(args.weight)
    kind, data = parse_algebra(args.algebra, len(lam), args.convention, args.series)
    rep = _build(kind, data, lam, args.convention, args.max_dim)
    if kind == "gl":
        checks = _gl_verify_checks(rep)
    elif args.convention == "s4":
        checks = _orth_verify_checks(rep)
    else:
        checks = _bcd_verify_checks(rep)
    failed = 0
    for name, thunk in checks:
        ok = bool(thunk())
        print("%s: %s" % (name, "PASS" if ok else "FAIL"))
        if not ok:
            failed += 1
    return 0 if failed == 0 else 1


def cmd_yangian_demo(args):
    pairs_in = []
    for part in args.strings.split(";"):
        pair = parse_weight(part)
        if len(pair) != 2:
            raise CliError("each string is an alpha,beta pair", 2)
        pairs_in.append(pair)
    try:
        module = yangian.build_tensor_module(pairs_in)
    except ValueError as exc:
        raise CliError(str(exc), 3)
    print("factors: %s" % "; ".join(
        "(%s)" % format_weight((f.alpha2, f.beta2)) for f in module.factors))
    print("dim: %d" % module.dim)
    print("irreducible(Y2): %s" % yangian.irreducible_Y2(module.factors))
    print("irreducible(Y-): %s" % yangian.irreducible_Yminus(module.factors))
    pairs = [(Fraction(1), Fraction(2)), (Fraction(1, 2), Fraction(3)),
             (Fraction(5), Fraction(-7, 3)), (Fraction(2), Fraction(9)),
             (Fraction(11, 7), Fraction(3, 5))]
    print("rtt-relation: %s" % ("PASS" if yangian.rtt_check(module, pairs) else "FAIL"))
    print("quantum-determinant-scalar: %s" %
          ("PASS" if yangian.quantum_det_scalar_check(module) else "FAIL"))
    if yangian.irreducible_Y2(module.factors) and all(
            not (set(a.values()) & set(b.values()))
            for i, a in enumerate(module.factors)
            for b in module.factors[i + 1:]):
        ok = yangian.eta_action_checks(module)
        print("gt-basis-actions: %s" % ("PASS" if ok else "FAIL"))
    return 0


def make_parser():
    ap = argparse.ArgumentParser(
        prog="gt",
        description="exact Gelfand-Tsetlin constructions for classical Lie algebras")
    ap.add_argument("--max-dim", type=int, default=600,
                    help="desk-scale dimension cap (default 600)")
    ap.add_argument("--series", choices=["gl", "so", "sp"],
                    help="optional series hint; the positional algebra wins")
    sub = ap.add_subparsers(dest="verb", required=True)
    for verb, fn in [("build", cmd_build), ("verify", cmd_verify),
                     ("dims", cmd_dims), ("branch", cmd_branch),
                     ("patterns", cmd_patterns), ("export", None)]:
        p = sub.add_parser(verb)
        p.add_argument("algebra", help="gl | sp | spN | soN")
        p.add_argument("weight", help="comma list, half-integers as p/2")
        p.add_argument("--json", help="write a JSON export to this path")
        p.add_argument("--convention", choices=["s3", "s4"], default="s3",
                       help="orthogonal/symplectic weight convention")
    p = sub.add_parser("yangian-demo")
    p.add_argument("--strings", default="1,0;3,2",
                   help="semicolon list of alpha,beta pairs")
    return ap


_WEIGHTLIKE = re.compile(r"^-\d+(/\d+)?(,-?\d+(/\d+)?)*$")


def run(argv):
    ap = make_parser()
    # keep argparse from reading negative weights as option flags
    argv = [(" " + t) if _WEIGHTLIKE.match(t) else t for t in argv]
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        if args.verb == "build":
            return cmd_build(args)
        if args.verb == "export":
            return cmd_build(args, verb="export")
        if args.verb == "verify":
            return cmd_verify(args)
        if args.verb == "dims":
            return cmd_dims(args)
        if args.verb == "branch":
            return cmd_branch(args)
        if args.verb == "patterns":
            return cmd_patterns(args)
        if args.verb == "yangian-demo":
            return cmd_yangian_demo(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except DeskScaleError as exc:
        print("refused: %s" % exc, file=sys.stderr)
        return 3
    except (patterns.DominanceError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
