"""Named verification batteries over the bundled corpus.

Each suite returns a list of (check name, passed, detail) rows; the CLI
prints one row per line, and the acceptance tests assert every row.
"""

from __future__ import annotations

from .actions import (
    Action,
    CrossedModule,
    adjoint_action,
    identity_crossed,
    supermodule_crossed,
    trivial_action,
)
from .algebras import (
    LieSuperAlgebra,
    abelian,
    series,
    subalgebra_on,
)
from .corpus import assoc_algebra, lie_algebra
from .cyclic import cyclic_sixterm, hc, hc1_kernel_model, milnor_hc1, connes
from .fields import QQ
from .freelie import Presentation, genset, miller_truncated_check
from .homology import (
    CrossedSES,
    d3_lemma_check,
    h2_via_exterior,
    homology,
    hopf_formula,
    ideal_sixterm,
    snake_sequence,
)
from .linalg import Subquotient, Subspace, vec_clean
from .spaces import GradedMap, SuperSpace
from .tensor import (
    adjoint_tensor_square,
    nonabelian_tensor,
    nilpotency_bounds_check,
    tensor_symmetry_iso,
    trivial_action_tensor,
    uce,
)

Row = tuple[str, bool, str]


def _fmt(dims) -> str:
    return f"({dims[0]}|{dims[1]})"


def _compatible_pairs():
    """Corpus pairs with compatible actions: adjoint self-pairs and trivial pairs."""
    pairs = []
    for name in ("heis", "gl11", "sl21", "sl30"):
        P = lie_algebra(name)
        adj = adjoint_action(P)
        pairs.append((f"{name}(x){name} adjoint", P, P, adj, adj))
    for a, b in (("abelian11", "abelian21"), ("heis", "abelian10")):
        M, N = lie_algebra(a), lie_algebra(b)
        pairs.append((f"{a}(x){b} trivial", M, N, trivial_action(M, N), trivial_action(N, M)))
    return pairs


def suite_tensor_props() -> list[Row]:
    rows: list[Row] = []
    for label, M, N, amn, anm in _compatible_pairs():
        if M is N and amn.name == "adjoint":
            t = adjoint_tensor_square(M)
        else:
            t = nonabelian_tensor(M, N, amn, anm)
        # construction certifies annihilation, Lie axioms and both crossed modules
        rows.append((f"{label}: well-defined, (mu),(nu) crossed", True,
                     f"dim {_fmt(t.algebra.space.dim_pair)}"))
        iso, swapped = tensor_symmetry_iso(t)
        rows.append((f"{label}: symmetry iso", True,
                     f"dim {t.algebra.dim} = {swapped.algebra.dim}"))
        if amn.is_trivial() and anm.is_trivial():
            sp = trivial_action_tensor(M, N)
            ok = sp.dim_pair == t.algebra.space.dim_pair and t.algebra.is_abelian()
            rows.append((f"{label}: equals Mab (x) Nab, abelian", ok,
                         f"{_fmt(sp.dim_pair)} vs {_fmt(t.algebra.space.dim_pair)}"))
    return rows


def _solvable2() -> LieSuperAlgebra:
    sp = SuperSpace(QQ, ("a", "b"), (0, 0))
    return LieSuperAlgebra(sp, {(0, 1): {1: 1}}, name="solv2")


def suite_nil_bounds() -> list[Row]:
    rows: list[Row] = []
    cases = []
    for name in ("heis", "gl11"):
        P = lie_algebra(name)
        adj = adjoint_action(P)
        cases.append((f"{name} adjoint", P, P, adj, adj))
    s2 = _solvable2()
    adj2 = adjoint_action(s2)
    cases.append(("solv2 adjoint", s2, s2, adj2, adj2))
    A, B = lie_algebra("abelian11"), lie_algebra("abelian21")
    cases.append(("abelian trivial", A, B, trivial_action(A, B), trivial_action(B, A)))
    for label, M, N, amn, anm in cases:
        rep = nilpotency_bounds_check(M, N, amn, anm)
        detail = ", ".join(f"{k}={v}" for k, v in rep.numbers.items() if v is not None)
        rows.append((f"bounds {label}", rep.ok, detail))
    return rows


def suite_uce() -> list[Row]:
    rows: list[Row] = []
    for name in ("sl21", "sl30"):
        P = lie_algebra(name)
        ce = uce(P)
        chain = homology(P, None, 2)
        ext = h2_via_exterior(P)
        ok = ce.kernel_dims == chain.dims == ext.dims
        rows.append((f"uce triangle {name}", ok,
                     f"ker {_fmt(ce.kernel_dims)} chain {_fmt(chain.dims)} wedge {_fmt(ext.dims)}"))
    return rows


def suite_d3_lemma() -> list[Row]:
    rows: list[Row] = []
    for name in ("abelian21", "heis", "sl21", "gl11"):
        P = lie_algebra(name)
        rep = d3_lemma_check(P)
        rows.append((f"d3 lemma {name}", rep.ok,
                     rep.details or f"dims {_fmt(rep.lhs_dims)}"))
    return rows


def suite_hopf() -> list[Row]:
    rows: list[Row] = []
    pres_heis = Presentation(genset([("x", 0), ("y", 0)]),
                             ([["x", "y"], "x"], [["x", "y"], "y"]))
    cases = [
        ("heis by relators, c=2", pres_heis, 2),
        ("free 2 even gens, c=2", Presentation(genset([("x", 0), ("y", 0)]), ()), 2),
        ("free 2 even gens, c=3", Presentation(genset([("x", 0), ("y", 0)]), ()), 3),
    ]
    for label, pres, c in cases:
        hres = hopf_formula(pres, c)
        chain = homology(hres.presented, None, 2)
        ok = hres.dims == chain.dims
        rows.append((f"hopf {label}", ok,
                     f"hopf {_fmt(hres.dims)} chain {_fmt(chain.dims)}"))
    return rows


def standard_crossed_ses() -> list[tuple[str, CrossedSES]]:
    """Three short exact sequences of crossed modules used by the snake suite."""
    out = []
    h = lie_algebra("heis")
    # (1) trivial coefficients 0 -> K -> K^2 -> K -> 0
    L = abelian(QQ, 1, 0, prefix="l")
    M = abelian(QQ, 2, 0, prefix="m")
    N = abelian(QQ, 1, 0, prefix="n")
    ses1 = CrossedSES(
        h,
        supermodule_crossed(h, L, trivial_action(h, L)),
        supermodule_crossed(h, M, trivial_action(h, M)),
        supermodule_crossed(h, N, trivial_action(h, N)),
        GradedMap.from_columns(L.space, M.space, [{0: 1}]),
        GradedMap.from_columns(M.space, N.space, [{}, {0: 1}]),
    )
    out.append(("trivial modules over heis", ses1))
    # (2) 0 -> Z -> ad -> ad/Z -> 0 as supermodules over heis
    s = series(h)
    zview = subalgebra_on(h, s.center, name="Z")
    had = abelian(QQ, 3, 0, prefix="ha")
    adj_table = {(p, m): h.bracket_basis(p, m)
                 for p in range(3) for m in range(3) if h.bracket_basis(p, m)}
    cm_m = supermodule_crossed(h, had, Action(h, had, adj_table))
    sq = Subquotient(Subspace.full(QQ, 3), s.center)
    qalg = abelian(QQ, sq.dim, 0, prefix="q")
    q_table = {}
    for p in range(3):
        for m in range(sq.dim):
            v = vec_clean(dict(enumerate(sq.reduce(h.bracket({p: 1}, sq.section[m])))))
            if v:
                q_table[(p, m)] = v
    cm_n = supermodule_crossed(h, qalg, Action(h, qalg, q_table))
    cm_l = supermodule_crossed(h, zview.algebra, trivial_action(h, zview.algebra))
    f2 = GradedMap.from_columns(zview.algebra.space, had.space,
                                [dict(c) for c in zview.inclusion.matrix.cols])
    g2 = GradedMap.from_columns(had.space, qalg.space,
                                [vec_clean(dict(enumerate(sq.reduce({i: 1})))) for i in range(3)])
    out.append(("center sequence over heis", CrossedSES(h, cm_l, cm_m, cm_n, f2, g2)))
    # (3) 0 -> (K,0) -> (P + K, pr) -> (P, id) -> 0 over gl11
    P = lie_algebra("gl11")
    labels = tuple(P.space.labels) + ("c",)
    parities = P.space.parities + (0,)
    spM = SuperSpace(QQ, labels, parities)
    Mx = LieSuperAlgebra(spM, {k: dict(v) for k, v in P.table.items()}, name="PxK")
    act = Action(P, Mx, {(p, m): P.bracket_basis(p, m)
                         for p in range(P.dim) for m in range(P.dim)
                         if P.bracket_basis(p, m)})
    bnd = GradedMap.from_columns(spM, P.space, [{i: 1} for i in range(P.dim)] + [{}])
    cm_m3 = CrossedModule(Mx, P, bnd, act)
    Kl = abelian(QQ, 1, 0, prefix="c")
    ses3 = CrossedSES(
        P,
        supermodule_crossed(P, Kl, trivial_action(P, Kl)),
        cm_m3,
        identity_crossed(P),
        GradedMap.from_columns(Kl.space, spM, [{P.dim: 1}]),
        GradedMap.from_columns(spM, P.space, [{i: 1} for i in range(P.dim)] + [{}]),
    )
    out.append(("central line over gl11", ses3))
    return out


def suite_snake() -> list[Row]:
    rows: list[Row] = []
    for label, ses in standard_crossed_ses():
        rep = snake_sequence(ses)
        dims = " ".join(_fmt(d) for d in rep.dims)
        rows.append((f"snake {label}", rep.ok, dims))
    return rows


def suite_cyclic_sixterm() -> list[Row]:
    rows: list[Row] = []
    for name in ("q", "dual", "grassmann", "m11"):
        A = assoc_algebra(name)
        st = cyclic_sixterm(A)
        dims = " ".join(_fmt(d) for d in st.report.dims)
        rows.append((f"cyclic six-term {name}", st.ok, dims))
        for ident, ok in st.identifications:
            rows.append((f"  {name}: {ident}", ok, ""))
    return rows


def suite_final_sixterm() -> list[Row]:
    rows: list[Row] = []
    h = lie_algebra("heis")
    rep = ideal_sixterm(h, series(h).center)
    rows.append(("six-term heis / center", rep.ok,
                 " ".join(_fmt(d) for d in rep.dims)))
    gl = lie_algebra("gl11")
    slpart = gl.product_subspace(gl.full_subspace(), gl.full_subspace())
    rep2 = ideal_sixterm(gl, slpart)
    rows.append(("six-term gl11 / sl-part", rep2.ok,
                 " ".join(_fmt(d) for d in rep2.dims)))
    return rows


def suite_miller() -> list[Row]:
    rows: list[Row] = []
    gen_cases = [
        [("x", 0)], [("t", 1)],
        [("x", 0), ("y", 0)], [("x", 0), ("t", 1)], [("s", 1), ("t", 1)],
    ]
    for gens in gen_cases:
        for c in (1, 2, 3):
            rep = miller_truncated_check(genset(gens), c)
            label = ",".join(f"{l}{'~' if p else ''}" for l, p in gens)
            rows.append((f"miller [{label}] c={c}", rep.ok,
                         f"kernel {_fmt(rep.kernel_dims)} = truncated {_fmt(rep.truncation_dims)}"))
    return rows


def suite_cyclic_crosspath() -> list[Row]:
    """HC_1 from the Connes complex against the kernel model, plus the
    Milnor comparison for supercommutative algebras."""
    rows: list[Row] = []
    for name in ("q", "dual", "grassmann", "m11"):
        A = assoc_algebra(name)
        cx = connes(A, 2)
        a = hc(A, 1, cx).dims
        b = hc1_kernel_model(A).dims
        rows.append((f"HC1({name}) two paths", a == b, f"{_fmt(a)} vs {_fmt(b)}"))
        if A.is_supercommutative():
            m = milnor_hc1(A).dims
            rows.append((f"HC1({name}) = Milnor (supercommutative)", a == m,
                         f"{_fmt(a)} vs {_fmt(m)}"))
    return rows


SUITES = {
    "tensor-props": suite_tensor_props,
    "nil-bounds": suite_nil_bounds,
    "uce": suite_uce,
    "d3-lemma": suite_d3_lemma,
    "hopf": suite_hopf,
    "snake": suite_snake,
    "cyclic-sixterm": suite_cyclic_sixterm,
    "final-sixterm": suite_final_sixterm,
    "miller": suite_miller,
    "cyclic-crosspath": suite_cyclic_crosspath,
}


def run_suite(name: str) -> list[Row]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name]()
