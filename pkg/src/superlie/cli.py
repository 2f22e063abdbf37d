"""Command line front end.

Exit codes: 0 when every certificate passes, 1 on a mathematical failure
or axiom violation, 2 on input errors.  Reports are deterministic for
identical inputs; ``--out json`` emits a canonical machine-readable form.

Bundled corpus files ship inside the package; an argument of the form
``@name`` (for example ``@sl21``) resolves to the bundled file, and
``superlie corpus export DIR`` materializes the whole corpus.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib import resources
from pathlib import Path

from .actions import adjoint_action, check_action, check_compatible, trivial_action
from .algebras import (
    AssocSuperAlgebra,
    LieSuperAlgebra,
    check_assoc_axioms,
    check_lie_axioms,
    series,
)
from .cyclic import (
    NotUnital,
    connes,
    cyclic_sixterm,
    hc,
    hc1_kernel_model,
    milnor_hc1,
)
from .fields import FieldError
from .freelie import DegreeOverflow, FieldUnsupported
from .homology import (
    ClassExceeded,
    ComplexInconsistent,
    homology,
    hopf_formula,
    nh,
    trivial_module,
)
from .io import ParseError, dumps_canonical, load_algebra, load_crossed, load_json, load_presentation, parse_action, parse_module
from .linalg import ContainmentError
from .suites import SUITES, run_suite
from .tensor import (
    BracketNotWellDefined,
    IncompatibleActions,
    NotPerfect,
    exterior_square,
    nonabelian_tensor,
    adjoint_tensor_square,
    uce,
)

MATH_ERRORS = (IncompatibleActions, NotPerfect, NotUnital, BracketNotWellDefined,
               ComplexInconsistent, ClassExceeded, DegreeOverflow, ContainmentError,
               FieldUnsupported)


def _fmt(dims) -> str:
    return f"({dims[0]}|{dims[1]})"


def resolve_path(arg: str) -> Path:
    if arg.startswith("@"):
        name = arg[1:]
        if not name.endswith(".json"):
            name += ".json"
        ref = resources.files("superlie").joinpath("data", name)
        if not ref.is_file():
            raise ParseError(f"no bundled file named {arg!r}")
        return Path(str(ref))
    return Path(arg)


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()[:16]


class Report:
    def __init__(self, command: str):
        self.data: dict = {"command": command, "inputs": {}, "results": {}, "status": "ok"}
        self.lines: list[str] = []

    def add_input(self, path: Path):
        self.data["inputs"][str(path)] = _digest(path)

    def line(self, text: str):
        self.lines.append(text)

    def result(self, key: str, value):
        self.data["results"][key] = value

    def emit(self, out: str, status_code: int) -> int:
        self.data["status"] = {0: "ok", 1: "failed", 2: "input-error"}[status_code]
        if out == "json":
            sys.stdout.write(dumps_canonical(self.data))
        else:
            for l in self.lines:
                print(l)
        return status_code


def cmd_check(args) -> int:
    rep = Report("check")
    path = resolve_path(args.path)
    alg = load_algebra(path)
    rep.add_input(path)
    if isinstance(alg, LieSuperAlgebra):
        cert = check_lie_axioms(alg)
        rep.result("kind", "lie")
        rep.result("dims", alg.space.dim_pair)
        if cert.ok:
            s = series(alg)
            cls = "perfect" if s.is_perfect else (
                f"class {s.nil_class}" if s.nil_class is not None else
                (f"solvable length {s.derived_length}" if s.derived_length is not None
                 else "not solvable"))
            rep.result("certified", True)
            rep.result("series", {
                "nil_class": s.nil_class, "derived_length": s.derived_length,
                "center_dim": s.center.dim, "perfect": s.is_perfect})
            rep.line(f"{alg.name}: certified Lie superalgebra, dim {alg.space}, {cls}")
            return rep.emit(args.out, 0)
        rep.result("certified", False)
        rep.result("violations", [str(v) for v in cert.violations[:8]])
        rep.line(f"{alg.name}: NOT a Lie superalgebra")
        for v in cert.violations[:8]:
            rep.line(f"  violation: {v}")
        return rep.emit(args.out, 1)
    cert = check_assoc_axioms(alg)
    rep.result("kind", "assoc")
    rep.result("dims", alg.space.dim_pair)
    if cert.ok:
        bits = ["associative"]
        if alg.unit is not None:
            bits.append("unital")
        if alg.is_supercommutative():
            bits.append("supercommutative")
        rep.result("certified", True)
        rep.result("properties", bits)
        rep.line(f"{alg.name}: {', '.join(bits)}, dim {alg.space}")
        return rep.emit(args.out, 0)
    rep.result("certified", False)
    rep.result("violations", [str(v) for v in cert.violations[:8]])
    rep.line(f"{alg.name}: NOT associative")
    for v in cert.violations[:8]:
        rep.line(f"  violation: {v}")
    return rep.emit(args.out, 1)


def _load_lie(path: Path) -> LieSuperAlgebra:
    alg = load_algebra(path)
    if not isinstance(alg, LieSuperAlgebra):
        raise ParseError(f"{path} is not a Lie superalgebra file")
    return alg


def cmd_tensor(args) -> int:
    rep = Report("tensor")
    path_m = resolve_path(args.m)
    path_n = resolve_path(args.n)
    M = _load_lie(path_m)
    N = _load_lie(path_n)
    if M.field != N.field:
        raise ParseError(f"field mismatch: {M.field} vs {N.field}")
    rep.add_input(path_m)
    rep.add_input(path_n)
    if args.adjoint:
        if algebra_fingerprint(M) != algebra_fingerprint(N):
            raise ParseError("--adjoint requires the same algebra on both sides")
        N = M
        amn = anm = adjoint_action(M)
    elif args.trivial:
        amn, anm = trivial_action(M, N), trivial_action(N, M)
    else:
        if not (args.act_mn and args.act_nm):
            raise ParseError("provide --act-mn and --act-nm, or --adjoint / --trivial")
        pa, pb = resolve_path(args.act_mn), resolve_path(args.act_nm)
        amn = parse_action(load_json(pa), M, N)
        anm = parse_action(load_json(pb), N, M)
        rep.add_input(pa)
        rep.add_input(pb)
        for a, label in ((amn, "M on N"), (anm, "N on M")):
            cert = check_action(a)
            if not cert.ok:
                rep.line(f"action {label} fails its axioms: {cert.violations[0]}")
                rep.result("action_valid", False)
                return rep.emit(args.out, 1)
        comp = check_compatible(amn, anm)
        if not comp.ok:
            rep.line(f"actions are not compatible: {comp.violations[0]}")
            rep.result("compatible", False)
            return rep.emit(args.out, 1)
    t = (adjoint_tensor_square(M) if (args.adjoint or (M is N and amn.name == "adjoint"))
         else nonabelian_tensor(M, N, amn, anm))
    dims = t.algebra.space.dim_pair
    imu, inu = t.im_mu, t.im_nu
    kmu, knu = t.mu.kernel(), t.nu.kernel()
    rep.result("dim", dims)
    rep.result("[M,N]^M", M.space.split_dims(imu.rows))
    rep.result("[M,N]^N", N.space.split_dims(inu.rows))
    rep.result("ker_mu", t.algebra.space.split_dims(kmu.rows))
    rep.result("ker_nu", t.algebra.space.split_dims(knu.rows))
    rep.line(f"M (x) N: dim {_fmt(dims)}; certified (bracket kills D, crossed modules pass)")
    rep.line(f"[M,N]^M: dim {_fmt(M.space.split_dims(imu.rows))}   "
             f"[M,N]^N: dim {_fmt(N.space.split_dims(inu.rows))}")
    rep.line(f"Ker mu: dim {_fmt(t.algebra.space.split_dims(kmu.rows))}   "
             f"Ker nu: dim {_fmt(t.algebra.space.split_dims(knu.rows))}")
    if args.exterior:
        if M is not N:
            raise ParseError("--exterior is supported for the self tensor square")
        ext = exterior_square(M)
        rep.result("square_ideal", t.algebra.space.split_dims(ext.square.rows))
        rep.result("exterior_dim", ext.algebra.space.dim_pair)
        rep.line(f"M square M: dim {_fmt(t.algebra.space.split_dims(ext.square.rows))}   "
                 f"M (^) M: dim {_fmt(ext.algebra.space.dim_pair)}")
    if args.uce:
        ce = uce(M)
        rep.result("uce_kernel", ce.kernel_dims)
        rep.line(f"universal central extension kernel (= H2): dim {_fmt(ce.kernel_dims)}")
    return rep.emit(args.out, 0)


def algebra_fingerprint(alg) -> tuple:
    table = tuple(sorted((k, tuple(sorted(v.items()))) for k, v in alg.table.items()))
    return (alg.space.labels, alg.space.parities, table)


def cmd_homology(args) -> int:
    rep = Report("homology")
    path = resolve_path(args.path)
    P = _load_lie(path)
    rep.add_input(path)
    module = trivial_module(P)
    if args.module:
        mp = resolve_path(args.module)
        module = parse_module(load_json(mp), P)
        rep.add_input(mp)
    from .homology import ce_complex

    max_n = args.degree
    cx = ce_complex(P, module, max_n + 1)
    dims_table = []
    for n in range(max_n + 1):
        r = homology(P, module, n, complex_=cx)
        dims_table.append(r.dims)
        rep.line(f"H{n}: dim {_fmt(r.dims)}")
    rep.result("homology", dims_table)
    status = 0
    if args.hopf:
        hp = resolve_path(args.hopf)
        pres = load_presentation(hp)
        rep.add_input(hp)
        hres = hopf_formula(pres, args.class_bound)
        chain = homology(hres.presented, None, 2)
        agree = hres.dims == chain.dims
        rep.result("hopf", {"formula": hres.dims, "chain": chain.dims, "agree": agree})
        rep.line(f"Hopf formula: {_fmt(hres.dims)}   chain H2: {_fmt(chain.dims)}   "
                 f"{'agree' if agree else 'DISAGREE'}")
        if not agree:
            status = 1
    if args.nonabelian:
        cp = resolve_path(args.nonabelian)
        if args.nonabelian == "identity":
            from .actions import identity_crossed
            cm = identity_crossed(P)
        else:
            cm = load_crossed(cp)
            rep.add_input(cp)
        r = nh(P, cm)
        rep.result("nh0", r.nh0.dims)
        rep.result("nh1", r.nh1.dims)
        rep.line(f"nh0: dim {_fmt(r.nh0.dims)}   nh1: dim {_fmt(r.nh1.dims)}")
    return rep.emit(args.out, status)


def cmd_cyclic(args) -> int:
    rep = Report("cyclic")
    path = resolve_path(args.path)
    A = load_algebra(path)
    rep.add_input(path)
    if not isinstance(A, AssocSuperAlgebra):
        raise ParseError(f"{path} is not an associative superalgebra file")
    if A.unit is None:
        raise NotUnital("cyclic homology commands require a unital algebra")
    cx = connes(A, 2)
    h0 = hc(A, 0, cx)
    h1 = hc(A, 1, cx)
    km = hc1_kernel_model(A)
    mil = milnor_hc1(A)
    rep.result("HC0", h0.dims)
    rep.result("HC1", h1.dims)
    rep.result("HC1_kernel_model", km.dims)
    rep.result("HC1_milnor", mil.dims)
    rep.line(f"HC0: dim {_fmt(h0.dims)}")
    rep.line(f"HC1: dim {_fmt(h1.dims)} (kernel model {_fmt(km.dims)})")
    rep.line(f"Milnor HC1: dim {_fmt(mil.dims)}")
    status = 0
    if h1.dims != km.dims:
        rep.line("HC1 cross-path MISMATCH")
        status = 1
    if A.is_supercommutative():
        note = "equal" if km.dims == mil.dims else "UNEQUAL"
        rep.line(f"supercommutative: HC1 and Milnor HC1 {note}")
        if km.dims != mil.dims:
            status = 1
    if args.sixterm:
        st = cyclic_sixterm(A)
        rep.result("sixterm_ok", st.ok)
        rep.result("sixterm_dims", st.report.dims)
        rep.line("six-term sequence: " + ("exact" if st.ok else "NOT exact"))
        for label, dims in st.table:
            rep.line(f"  {label}: dim {_fmt(dims)}")
        for ident, ok in st.identifications:
            rep.line(f"  {ident}: {'ok' if ok else 'FAIL'}")
        if not st.ok:
            status = 1
    return rep.emit(args.out, status)


def cmd_verify(args) -> int:
    rep = Report("verify")
    rows = run_suite(args.suite)
    ok = True
    for name, passed, detail in rows:
        mark = "pass" if passed else "FAIL"
        ok = ok and passed
        rep.line(f"[{mark}] {name}" + (f"  {detail}" if detail else ""))
    rep.result("suite", args.suite)
    rep.result("rows", [{"name": n, "ok": p, "detail": d} for n, p, d in rows])
    rep.result("passed", ok)
    return rep.emit(args.out, 0 if ok else 1)


def cmd_corpus(args) -> int:
    rep = Report("corpus")
    if args.action == "list":
        names = sorted(
            p.name for p in resources.files("superlie").joinpath("data").iterdir()
            if p.name.endswith(".json"))
        for n in names:
            rep.line(n)
        rep.result("files", names)
        return rep.emit(args.out, 0)
    target = Path(args.dir)
    target.mkdir(parents=True, exist_ok=True)
    copied = []
    for p in sorted(resources.files("superlie").joinpath("data").iterdir(),
                    key=lambda q: q.name):
        if p.name.endswith(".json"):
            (target / p.name).write_text(p.read_text(encoding="utf-8"), encoding="utf-8")
            copied.append(p.name)
    rep.result("exported", copied)
    rep.line(f"exported {len(copied)} files to {target}")
    return rep.emit(args.out, 0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="superlie",
        description="Exact non-abelian tensor products, homology and cyclic "
                    "homology of Lie superalgebras")
    ap.add_argument("--out", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="certify the axioms of an algebra file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tensor", help="non-abelian tensor product of two algebras")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("--act-mn", help="action file of M on N")
    p.add_argument("--act-nm", help="action file of N on M")
    p.add_argument("--adjoint", action="store_true", help="use the adjoint self-actions")
    p.add_argument("--trivial", action="store_true", help="use trivial actions")
    p.add_argument("--exterior", action="store_true", help="also compute the exterior square")
    p.add_argument("--uce", action="store_true",
                   help="also compute the universal central extension of M")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("homology", help="homology of a Lie superalgebra")
    p.add_argument("path")
    p.add_argument("-n", "--degree", type=int, default=2)
    p.add_argument("-m", "--module", help="coefficient supermodule file")
    p.add_argument("--hopf", help="presentation file for the Hopf formula")
    p.add_argument("--class", dest="class_bound", type=int, default=2,
                   help="nilpotency class bound for --hopf")
    p.add_argument("--nonabelian", help="crossed module file, or 'identity'")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cyclic", help="cyclic homology of an associative superalgebra")
    p.add_argument("path")
    p.add_argument("--sixterm", action="store_true")
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="list or export the bundled corpus")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("dir", nargs="?", default="corpus")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FieldError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except MATH_ERRORS as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
