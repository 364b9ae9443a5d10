"""Command-line interface.

Subcommands: brace, solution, verify, twist, chain, fixture, export.
Reports are JSON documents (schema "ybx/1"); the chain report path also
writes a tab-delimited summary and, on request, matplotlib figures.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .brace import (
    brace_from_json,
    brace_from_ring,
    brace_to_json,
    ring_spec_from_json,
    validate_brace,
    validate_nilpotent_ring,
    zp2_ring_spec,
)
from .boundary import (
    b_from_reflection,
    baxterize_K,
    check_spectral_reflection,
    cnumber_K,
    cnumber_solves_re2,
)
from .chain import (
    build_open,
    boundary_subalgebra_checks,
    check_commutativity,
    check_dressed_exchange,
    hamiltonian_check,
    hecke_expressibility,
    symmetry_suite,
    transfer_coefficients,
)
from .fixtures import FIXTURES, make_fixture
from .linearize import (
    bax_R,
    baxterize,
    check_crossing,
    check_hecke_a,
    check_unitarity,
    check_ybe_spectral,
    linearize,
    trace_identity,
)
from .qdeform import build_g, check_hecke_q, check_uq_symmetry, uq_fundamental_coproducts
from .report import Report
from .rings import RING_L, UniPoly, rat
from .solutions import (
    check_set_reflection,
    solution_from_json,
    solution_to_json,
    validate_solution,
)
from .brace import solution_from_brace
from .tensor import (
    ShapedMatrix,
    export_coo_json,
    export_dense_csv,
    import_coo_json,
    import_dense_csv,
)
from .twist import build_twist, cell_pairing, eigen_multiplicity_check, verify_twist

CHAIN_CHECKS = ("commute", "hamiltonian", "hecke-span", "subalgebra", "symmetries",
                "exchange")


def _load_boundary(path, n):
    """Boundary JSON: either {"k": [...]} for a set reflection or
    {"identity": true}."""
    if path is None:
        return None, ShapedMatrix.identity((n,))
    with open(path) as fh:
        obj = json.load(fh)
    if obj.get("identity"):
        return None, ShapedMatrix.identity((n,))
    k = list(obj["k"])
    if len(k) != n:
        raise SystemExit(f"boundary map has {len(k)} points, solution has {n}")
    return k, None


def cmd_brace(args):
    if args.brace_cmd == "zp2":
        spec = zp2_ring_spec(args.p)
    else:
        spec = ring_spec_from_json(args.ring)
    validate_nilpotent_ring(spec)
    b = brace_from_ring(spec)
    validate_brace(b)
    out = brace_to_json(b, args.out)
    if args.out is None:
        json.dump(out, sys.stdout, indent=2)
        print()
    return 0


def cmd_solution(args):
    if args.solution_cmd == "from-brace":
        s = solution_from_brace(brace_from_json(args.brace))
        out = solution_to_json(s, args.out)
        if args.out is None:
            json.dump(out, sys.stdout, indent=2)
            print()
        return 0
    s = solution_from_json(args.solution)
    validate_solution(s)
    print(f"valid involutive non-degenerate solution on {s.n} points")
    return 0


def _emit_report(rep, args):
    doc = rep.to_json()
    if getattr(args, "report", None):
        rep.write(args.report)
    for line in rep.summary_lines():
        print(line)
    return 0 if rep.ok else 1


def cmd_verify(args):
    rep = Report(args.verify_cmd)
    if args.verify_cmd == "yang-baxter":
        s = solution_from_json(args.solution)
        rc = linearize(s)
        R = bax_R(rc)
        rep.run("set-solution", "non-degenerate involutive set braid relation",
                lambda: validate_solution(s))
        rep.run("spectral-ybe", "R12 R13 R23 == R23 R13 R12 over Q[l1,l2]",
                lambda: check_ybe_spectral(baxterize(rc)))
        rep.run("unitarity", "R12(l) R21(-l) == (1 - l^2) I",
                lambda: check_unitarity(R))
        rep.run("crossing", "R^t1(l) R^t2(-l-n) == l(-l-n) I",
                lambda: check_crossing(R))
        rep.run("hecke", "(rc - 1)(rc + 1) == 0 and braid relation",
                lambda: check_hecke_a(rc))
        rep.run("partial-trace", "tr_1(rc) == I",
                lambda: trace_identity(rc))
    elif args.verify_cmd == "reflection":
        s = solution_from_json(args.solution)
        rc = linearize(s)
        k, b = _load_boundary(args.boundary, s.n)
        if k is not None:
            rep.run("set-reflection", "k1 rc k1 rc == rc k1 rc k1 pointwise",
                    lambda: check_set_reflection(s, k))
            b = b_from_reflection(s, k)
        Q = rat(args.Q)
        K = baxterize_K(b, Q, 2)
        rep.run("spectral-reflection",
                "Rc(d) K1(l1) Rc(d) K1(l2) == K1(l2) Rc(d) K1(l1) Rc(d) form",
                lambda: check_spectral_reflection(baxterize(rc), K))
    else:
        n = args.n
        g = build_g(n)
        rep.run("q-hecke", "(g - q)(g + 1/q) == 0 and braid over Q[s,1/s]",
                lambda: check_hecke_q(g))
        rep.run("q-symmetry", "[g, coproduct(Y)] == 0 for Chevalley generators",
                lambda: check_uq_symmetry(g, uq_fundamental_coproducts(n)))
    return _emit_report(rep, args)


def cmd_twist(args):
    s = solution_from_json(args.solution)
    pairing = cell_pairing(s)
    f = build_twist(s)
    verify_twist(s, f)
    eigen_multiplicity_check(s)
    doc = export_coo_json(f)
    doc["pairing"] = {
        "fixed": [list(c) for c in pairing.fixed],
        "cycles": [[list(a), list(b)] for a, b in pairing.cycles],
    }
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=2)
    print(f"twist verified, written to {args.out}")
    return 0


def _chain_figures(chain, rc, outdir):
    import os

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    tcoeffs = transfer_coefficients(chain)
    paths = []
    for name, m in (("braid-operator", rc),
                    ("transfer-top-coefficient", tcoeffs[0]),
                    ("hamiltonian-coefficient", tcoeffs[2 * chain.sites])):
        dense = [[float(v) for v in row] for row in m.dense()]
        fig, ax = plt.subplots()
        im = ax.imshow(dense, cmap="RdBu", interpolation="nearest")
        fig.colorbar(im, ax=ax)
        ax.set_title(name)
        path = os.path.join(outdir, f"{name}.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)
    return paths


def cmd_chain(args):
    s = solution_from_json(args.solution)
    n = s.n
    rc = linearize(s)
    k, b = _load_boundary(args.boundary, n)
    if k is not None:
        b = b_from_reflection(s, k)
    K = cnumber_K(b, Fraction(1))
    chain = build_open(s, args.sites, K, args.variant)
    checks = [c for c in args.checks.split(",") if c] if args.checks else []
    for c in checks:
        if c not in CHAIN_CHECKS:
            raise SystemExit(f"unknown check {c!r}; choose from {CHAIN_CHECKS}")
    rep = Report(f"chain n={n} sites={args.sites} variant={args.variant}")
    # commutativity only follows when K solves the variant's c-number relation
    k_solves = cnumber_solves_re2(rc, K, args.variant)
    if "commute" in checks:
        rep.run("commute", "[t(l1), t(l2)] == 0 order by order",
                lambda: check_commutativity(chain), not_applicable=not k_solves)
    if "hamiltonian" in checks:
        rep.run("hamiltonian", "t^(2N) == n (2 sum rc + bhat_1) + 2 I",
                lambda: hamiltonian_check(chain),
                not_applicable=args.variant != "reflection")
    if "hecke-span" in checks:
        rep.run("hecke-span", "every t^(k), k >= 1, lies in the word span",
                lambda: hecke_expressibility(chain),
                not_applicable=args.variant != "reflection")
    if "subalgebra" in checks:
        def sub():
            out = boundary_subalgebra_checks(chain, b)
            bad = [key for key, ok in out.items() if not ok]
            assert not bad, f"failing sections: {bad}"
        rep.run("subalgebra", "dressed-coefficient commutant and closure checks",
                sub, not_applicable=args.variant != "reflection")
    if "exchange" in checks:
        rep.run("exchange", "dressed operator quadratic exchange relation",
                lambda: check_dressed_exchange(chain), not_applicable=not k_solves)
    if "symmetries" in checks:
        for name, status, detail in symmetry_suite(chain, b):
            rep.add(name, detail, status)
    if args.report:
        rep.write(args.report)
        base = args.report.rsplit(".", 1)[0]
        with open(base + ".tsv", "w") as fh:
            fh.write("check\tstatus\tseconds\n")
            for c in rep.checks:
                fh.write(f"{c.name}\t{c.status}\t{c.seconds:.6f}\n")
    if args.figures:
        for p in _chain_figures(chain, rc, args.figures):
            print(f"figure: {p}")
    for line in rep.summary_lines():
        print(line)
    return 0 if rep.ok else 1


def cmd_fixture(args):
    kwargs = {}
    if args.p is not None:
        kwargs["p"] = args.p
    if args.n is not None:
        kwargs["n"] = args.n
    fx = make_fixture(args.name, **kwargs)
    solution_to_json(fx["solution"], args.out)
    print(f"solution written to {args.out}")
    if fx.get("brace") is not None and args.brace_out:
        brace_to_json(fx["brace"], args.brace_out)
        print(f"brace written to {args.brace_out}")
    return 0


def cmd_export(args):
    with open(args.input) as fh:
        obj = json.load(fh)
    m = import_coo_json(obj)
    if args.format == "coo-json":
        export_coo_json(m, args.out)
    else:
        export_dense_csv(m, args.out)
    print(f"written {args.out}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="ybx", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("brace", help="build and validate braces")
    bsub = b.add_subparsers(dest="brace_cmd", required=True)
    b1 = bsub.add_parser("from-ring", help="brace from a nilpotent ring JSON")
    b1.add_argument("ring")
    b1.add_argument("--out")
    b2 = bsub.add_parser("zp2", help="brace of Z/p^2 with a b = p a b")
    b2.add_argument("--p", type=int, required=True)
    b2.add_argument("--out")
    b.set_defaults(fn=cmd_brace)

    s = sub.add_parser("solution", help="build and validate set solutions")
    ssub = s.add_subparsers(dest="solution_cmd", required=True)
    s1 = ssub.add_parser("from-brace")
    s1.add_argument("brace")
    s1.add_argument("--out")
    s2 = ssub.add_parser("validate")
    s2.add_argument("solution")
    s.set_defaults(fn=cmd_solution)

    v = sub.add_parser("verify", help="run verification suites")
    vsub = v.add_subparsers(dest="verify_cmd", required=True)
    v1 = vsub.add_parser("yang-baxter")
    v1.add_argument("solution")
    v1.add_argument("--report")
    v2 = vsub.add_parser("reflection")
    v2.add_argument("solution")
    v2.add_argument("boundary", nargs="?")
    v2.add_argument("--variant", choices=("reflection", "twisted"),
                    default="reflection")
    v2.add_argument("--Q", default="1")
    v2.add_argument("--report")
    v3 = vsub.add_parser("q-hecke")
    v3.add_argument("--n", type=int, required=True)
    v3.add_argument("--report")
    v.set_defaults(fn=cmd_verify)

    t = sub.add_parser("twist", help="compute and verify the Drinfeld twist")
    tsub = t.add_subparsers(dest="twist_cmd", required=True)
    t1 = tsub.add_parser("compute")
    t1.add_argument("solution")
    t1.add_argument("--out", required=True)
    t.set_defaults(fn=cmd_twist)

    c = sub.add_parser("chain", help="open-chain transfer matrix checks")
    csub = c.add_subparsers(dest="chain_cmd", required=True)
    c1 = csub.add_parser("transfer")
    c1.add_argument("--solution", required=True)
    c1.add_argument("--boundary")
    c1.add_argument("--sites", type=int, required=True)
    c1.add_argument("--variant", choices=("reflection", "twisted"),
                    default="reflection")
    c1.add_argument("--checks", default="commute")
    c1.add_argument("--report")
    c1.add_argument("--figures", help="directory for rendered figures")
    c.set_defaults(fn=cmd_chain)

    f = sub.add_parser("fixture", help="generate bundled fixtures")
    fsub = f.add_subparsers(dest="fixture_cmd", required=True)
    f1 = fsub.add_parser("generate")
    f1.add_argument("name", choices=sorted(FIXTURES))
    f1.add_argument("--out", required=True)
    f1.add_argument("--brace-out")
    f1.add_argument("--p", type=int)
    f1.add_argument("--n", type=int)
    f.set_defaults(fn=cmd_fixture)

    e = sub.add_parser("export", help="convert matrix files between formats")
    e.add_argument("input", help="COO JSON file")
    e.add_argument("--format", choices=("coo-json", "dense-csv"),
                   required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(fn=cmd_export)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
