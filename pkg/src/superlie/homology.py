"""Homology of Lie superalgebras and the six-term exact sequences.

The chain complex has C_n = (n-th super exterior power of P) (x) M with
the boundary

  d_n(x_1^...^x_n (x) y) =
      sum_i (-1)^{i + |x_i| sum_{k>i} |x_k|} (x_1^...^x_i-hat^...^x_n (x) x_i.y)
    + sum_{i<j} (-1)^{i+j+|x_i| sum_{k<i}|x_k| + |x_j| sum_{l<j}|x_l| + |x_i||x_j|}
          ([x_i,x_j]^x_1^...^x_i-hat^...^x_j-hat^...^x_n (x) y)

and d.d = 0 is asserted on every constructed complex: it is the global
sentinel for the sign conventions shared across the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import Action, CrossedModule, identity_crossed, ideal_crossed
from .algebras import (
    AxiomReport,
    LieSuperAlgebra,
    NotAnIdeal,
    Violation,
    ideal_closure,
    is_graded_ideal,
    quotient_algebra,
    subalgebra_on,
)
from .fields import Field
from .freelie import (
    Presentation,
    free_truncated,
    word_degree,
)
from .linalg import (
    Subquotient,
    Subspace,
    vec_axpy,
    vec_clean,
)
from .spaces import (
    GradedMap,
    SuperSpace,
    WedgeMonomial,
    exterior_power,
    wedge_normalize,
)
from .tensor import (
    ExteriorProduct,
    TensorProduct,
    exterior_square,
    induced_tensor_map,
    nonabelian_exterior,
    nonabelian_tensor,
)


class ComplexInconsistent(RuntimeError):
    """d.d != 0 or an induced boundary failed to descend: a construction bug."""


class ClassExceeded(ValueError):
    """A presentation's relators cannot be evaluated in the chosen truncation."""


DEFAULT_MAX_DEGREE = 3


# ---------------------------------------------------------------------------
# supermodules (coefficients)


class Supermodule:
    """A supermodule over P: a graded space with action constants."""

    def __init__(self, p: LieSuperAlgebra, space: SuperSpace,
                 table: dict[tuple[int, int], dict], name: str = ""):
        self.p = p
        self.space = space
        self.name = name
        self.field = space.field
        self.table = {
            key: vec_clean({k: self.field.of(c) for k, c in v.items()})
            for key, v in table.items()
        }
        self.table = {k: v for k, v in self.table.items() if v}

    def act_basis(self, p: int, m: int) -> dict:
        return self.table.get((p, m), {})

    def act(self, pvec: dict, mvec: dict) -> dict:
        out: dict = {}
        for p, cp in pvec.items():
            for m, cm in mvec.items():
                c = cp * cm
                if c == 0:
                    continue
                b = self.act_basis(p, m)
                if b:
                    vec_axpy(out, c, b)
        if self.field.p is not None:
            out = {k: d % self.field.p for k, d in out.items() if d % self.field.p}
        return out

    def as_abelian_algebra(self, prefix: str = "") -> LieSuperAlgebra:
        sp = self.space
        if prefix:
            sp = SuperSpace(sp.field, tuple(prefix + l for l in sp.labels), sp.parities)
        return LieSuperAlgebra(sp, {}, name=self.name or "module")

    def as_action(self, target: LieSuperAlgebra) -> Action:
        return Action(self.p, target, dict(self.table), name=self.name or "module")


def check_supermodule(m: Supermodule, max_violations: int = 16) -> AxiomReport:
    violations: list[Violation] = []
    P = m.p
    pp = P.space.parities
    pm = m.space.parities
    for (p, i), v in m.table.items():
        want = (pp[p] + pm[i]) % 2
        for k, c in v.items():
            if pm[k] != want:
                violations.append(Violation("module-parity", (p, i, k), {k: c}))
    for p in range(P.dim):
        for q in range(P.dim):
            sgn = -1 if pp[p] * pp[q] else 1
            for i in range(m.space.dim):
                lhs = m.act(P.bracket_basis(p, q), {i: 1})
                rhs = m.act({p: 1}, m.act_basis(q, i))
                vec_axpy(rhs, -sgn, m.act({q: 1}, m.act_basis(p, i)))
                defect = {k: lhs.get(k, 0) - rhs.get(k, 0) for k in set(lhs) | set(rhs)}
                if m.field.p is not None:
                    defect = {k: c % m.field.p for k, c in defect.items()}
                if vec_clean(defect):
                    violations.append(Violation("module-axiom", (p, q, i), defect))
                    if len(violations) >= max_violations:
                        return AxiomReport(False, violations)
    return AxiomReport(not violations, violations)


def trivial_module(P: LieSuperAlgebra) -> Supermodule:
    sp = SuperSpace(P.field, ("1",), (0,))
    return Supermodule(P, sp, {}, name="K")


def adjoint_module(P: LieSuperAlgebra) -> Supermodule:
    table = {}
    for p in range(P.dim):
        for m in range(P.dim):
            v = P.bracket_basis(p, m)
            if v:
                table[(p, m)] = v
    return Supermodule(P, P.space, table, name="adjoint")


# ---------------------------------------------------------------------------
# the chain complex


@dataclass
class ChainComplex:
    p: LieSuperAlgebra
    module: Supermodule
    spaces: list[SuperSpace]
    monomials: list[list[WedgeMonomial]]
    boundaries: list[GradedMap | None]  # boundaries[n]: C_n -> C_{n-1}, n >= 1

    def boundary(self, n: int) -> GradedMap:
        b = self.boundaries[n]
        if b is None:
            raise IndexError(f"no boundary at degree {n}")
        return b


def ce_complex(P: LieSuperAlgebra, M: Supermodule, max_n: int = DEFAULT_MAX_DEGREE) -> ChainComplex:
    """The chain complex of P with coefficients in M up to degree max_n."""
    field = P.field
    par = P.space.parities
    dm = M.space.dim
    spaces: list[SuperSpace] = []
    monos: list[list[WedgeMonomial]] = []
    index_of: list[dict[tuple[int, ...], int]] = []
    for n in range(max_n + 1):
        wedge, mlist = exterior_power(P.space, n)
        labels = []
        parities = []
        for w_idx, m in enumerate(mlist):
            for t in range(dm):
                if dm == 1 and M.space.labels[t] == "1":
                    labels.append(wedge.labels[w_idx])
                else:
                    labels.append(f"{wedge.labels[w_idx]}(x){M.space.labels[t]}")
                parities.append((wedge.parities[w_idx] + M.space.parities[t]) % 2)
        spaces.append(SuperSpace(field, tuple(labels), tuple(parities)))
        monos.append(mlist)
        index_of.append({m.factors: i for i, m in enumerate(mlist)})

    boundaries: list[GradedMap | None] = [None]
    for n in range(1, max_n + 1):
        cols: list[dict] = []
        for m in monos[n]:
            xs = m.factors
            pre_par = [par[x] for x in xs]
            for t in range(dm):
                col: dict = {}
                # module-action terms
                for i in range(n):
                    acted = M.act_basis(xs[i], t)
                    if acted:
                        tail = sum(pre_par[k] for k in range(i + 1, n))
                        s = -1 if ((i + 1) + pre_par[i] * tail) % 2 else 1
                        rest = xs[:i] + xs[i + 1:]
                        w_idx = index_of[n - 1][rest]
                        for t2, c in acted.items():
                            key = w_idx * dm + t2
                            col[key] = col.get(key, 0) + s * c
                # bracket terms
                for i in range(n):
                    for j in range(i + 1, n):
                        br = P.bracket_basis(xs[i], xs[j])
                        if not br:
                            continue
                        head_i = sum(pre_par[k] for k in range(i))
                        head_j = sum(pre_par[l] for l in range(j))
                        exp = (i + 1) + (j + 1) + pre_par[i] * head_i \
                            + pre_par[j] * head_j + pre_par[i] * pre_par[j]
                        s = -1 if exp % 2 else 1
                        rest = tuple(x for k, x in enumerate(xs) if k not in (i, j))
                        for e, c in br.items():
                            s2, mono = wedge_normalize([e, *rest], par)
                            if mono is None:
                                continue
                            key = index_of[n - 1][mono.factors] * dm + t
                            col[key] = col.get(key, 0) + s * s2 * c
                if field.p is not None:
                    col = {k: c % field.p for k, c in col.items() if c % field.p}
                cols.append(vec_clean(col))
        boundaries.append(GradedMap.from_columns(spaces[n], spaces[n - 1], cols))

    for n in range(2, max_n + 1):
        comp = boundaries[n - 1].compose(boundaries[n])
        if not comp.is_zero():
            raise ComplexInconsistent(f"d_{n-1} . d_{n} != 0")
    return ChainComplex(P, M, spaces, monos, boundaries)


@dataclass
class HomologyResult:
    n: int
    dims: tuple[int, int]
    representatives: list[dict]
    subquotient: Subquotient | None = None

    @property
    def dim(self) -> int:
        return self.dims[0] + self.dims[1]


def homology(P: LieSuperAlgebra, M: Supermodule | None, n: int,
             complex_: ChainComplex | None = None,
             max_n: int | None = None) -> HomologyResult:
    """H_n = Ker d_n / Im d_{n+1} with canonical representatives."""
    if M is None:
        M = trivial_module(P)
    if max_n is None:
        max_n = n + 1
    if complex_ is None:
        complex_ = ce_complex(P, M, max_n)
    if n + 1 >= len(complex_.spaces):
        raise IndexError(f"complex too short for H_{n}")
    ker = complex_.boundary(n).kernel() if n >= 1 \
        else Subspace.full(P.field, complex_.spaces[0].dim)
    img = complex_.boundary(n + 1).image()
    sq = Subquotient(ker, img)
    dims = complex_.spaces[n].split_dims(sq.section)
    return HomologyResult(n, dims, [dict(s) for s in sq.section], sq)


# ---------------------------------------------------------------------------
# labeled subquotient spaces and maps between them (sequence plumbing)


@dataclass
class QuotientSpace:
    """An ambient quotient (or sub-then-quotient) with a labeled basis."""

    space: SuperSpace
    sq: Subquotient
    parent: SuperSpace

    @property
    def dims(self) -> tuple[int, int]:
        return self.space.dim_pair

    def reduce(self, v: dict) -> dict:
        return vec_clean(dict(enumerate(self.sq.reduce(v))))

    def lift(self, v: dict) -> dict:
        return self.sq.lift(v)


def quotient_space(parent: SuperSpace, top: Subspace, bottom: Subspace,
                   prefix: str) -> QuotientSpace:
    sq = Subquotient(top, bottom)
    labels = tuple(f"{prefix}{k}:{parent.labels[min(s)]}" for k, s in enumerate(sq.section))
    parities = []
    for s in sq.section:
        par = parent.parity_of_vec(s)
        if par is None:
            raise NotAnIdeal("section is not parity homogeneous")
        parities.append(par)
    return QuotientSpace(SuperSpace(parent.field, labels, tuple(parities)), sq, parent)


def sub_space(parent: SuperSpace, rows: Subspace, prefix: str) -> QuotientSpace:
    return quotient_space(parent, rows, Subspace(parent.field, parent.dim, []), prefix)


def connect(src: QuotientSpace, dst: QuotientSpace, raw_map) -> GradedMap:
    """The induced map on labeled spaces: lift, apply, reduce."""
    cols = []
    for i in range(src.space.dim):
        v = src.lift({i: 1})
        cols.append(dst.reduce(raw_map(v)))
    return GradedMap.from_columns(src.space, dst.space, cols)


@dataclass
class ExactnessReport:
    ok: bool
    nodes: list[tuple[str, int, int, bool]]  # (label, im_dim, ker_dim, ok)

    def first_failure(self) -> str | None:
        for label, _, _, ok in self.nodes:
            if not ok:
                return label
        return None


def exactness_check(maps: list[GradedMap]) -> ExactnessReport:
    """Im(f_k) = Ker(f_{k+1}) at every interior node, by canonical echelon
    equality; append a zero map to assert surjectivity onto the last space."""
    nodes = []
    ok = True
    for k in range(len(maps) - 1):
        f, g = maps[k], maps[k + 1]
        if f.target.dim != g.source.dim:
            raise ValueError(f"maps {k} and {k + 1} are not composable")
        im = f.image()
        ker = g.kernel()
        good = im == ker
        ok = ok and good
        nodes.append((f"node{k + 1}", im.dim, ker.dim, good))
    return ExactnessReport(ok, nodes)


def zero_map_to_point(space: SuperSpace) -> GradedMap:
    zero = SuperSpace(space.field, (), ())
    return GradedMap.from_columns(space, zero, [dict() for _ in range(space.dim)])


# ---------------------------------------------------------------------------
# the comparison lemma for degree 2


@dataclass
class D3LemmaReport:
    ok: bool
    lhs_dims: tuple[int, int]
    rhs_dims: tuple[int, int]
    details: str = ""


def _wedge_bracket_cols(P: LieSuperAlgebra, monos, index_of) -> dict:
    """Bilinear bracket on the second exterior power:
    [x^y, x'^y'] = [x,y] ^ [x',y']."""
    par = P.space.parities

    def pair_bracket(a: WedgeMonomial, b: WedgeMonomial) -> dict:
        i, j = a.factors
        k, l = b.factors
        u = P.bracket_basis(i, j)
        v = P.bracket_basis(k, l)
        out: dict = {}
        for e1, c1 in u.items():
            for e2, c2 in v.items():
                s, mono = wedge_normalize([e1, e2], par)
                if mono is None:
                    continue
                idx = index_of[mono.factors]
                out[idx] = out.get(idx, 0) + s * c1 * c2
        return vec_clean(out)

    return pair_bracket


def d3_lemma_check(P: LieSuperAlgebra) -> D3LemmaReport:
    """Certify that the second exterior power modulo the image of d_3, with
    the bracket [x^y, x'^y'] = [x,y]^[x',y'], is isomorphic to the
    non-abelian exterior square as a Lie superalgebra."""
    cx = ce_complex(P, trivial_module(P), 3)
    c2 = cx.spaces[2]
    monos2 = cx.monomials[2]
    index2 = {m.factors: i for i, m in enumerate(monos2)}
    im_d3 = cx.boundary(3).image()
    pair_bracket = _wedge_bracket_cols(P, monos2, index2)

    def bracket2(u: dict, v: dict) -> dict:
        out: dict = {}
        for a, ca in u.items():
            for b, cb in v.items():
                c = ca * cb
                if c == 0:
                    continue
                vec_axpy(out, c, pair_bracket(monos2[a], monos2[b]))
        return out

    # the bracket must descend to the quotient by Im d3
    for r in im_d3.rows:
        for b in range(c2.dim):
            if not im_d3.contains_vec(bracket2(r, {b: 1})):
                return D3LemmaReport(False, (0, 0), (0, 0),
                                     "bracket does not preserve Im d3")
            if not im_d3.contains_vec(bracket2({b: 1}, r)):
                return D3LemmaReport(False, (0, 0), (0, 0),
                                     "bracket does not preserve Im d3")

    lhs = quotient_space(c2, Subspace.full(P.field, c2.dim), im_d3, "w")
    ext = exterior_square(P)
    rhs_dims = ext.algebra.space.dim_pair
    lhs_dims = lhs.space.dim_pair

    # canonical map: the class of x^y goes to the class of x(x)y
    t = ext.tensor
    esq = Subquotient(Subspace.full(P.field, t.algebra.dim), ext.square)

    def to_exterior(v: dict) -> dict:
        out: dict = {}
        for a, c in v.items():
            i, j = monos2[a].factors
            vec_axpy(out, c, t.embed(i, j))
        return vec_clean(dict(enumerate(esq.reduce(out))))

    cols = [to_exterior(lhs.lift({i: 1})) for i in range(lhs.space.dim)]
    phi = GradedMap.from_columns(lhs.space, ext.algebra.space, cols)
    if lhs.space.dim != ext.algebra.dim or phi.matrix.rank() != lhs.space.dim:
        return D3LemmaReport(False, lhs_dims, rhs_dims, "map is not bijective")
    # bracket preservation on the quotient basis
    for a in range(lhs.space.dim):
        for b in range(lhs.space.dim):
            u = lhs.lift({a: 1})
            v = lhs.lift({b: 1})
            lhs_br = phi.apply(lhs.reduce(bracket2(u, v)))
            rhs_br = ext.algebra.bracket(phi.apply({a: 1}), phi.apply({b: 1}))
            defect = {k: lhs_br.get(k, 0) - rhs_br.get(k, 0) for k in set(lhs_br) | set(rhs_br)}
            if P.field.p is not None:
                defect = {k: c % P.field.p for k, c in defect.items()}
            if vec_clean(defect):
                return D3LemmaReport(False, lhs_dims, rhs_dims,
                                     f"bracket mismatch at ({a},{b})")
    return D3LemmaReport(True, lhs_dims, rhs_dims)


def h2_via_exterior(P: LieSuperAlgebra) -> HomologyResult:
    """H_2 as the kernel of x^y -> [x,y] on the exterior square."""
    ext = exterior_square(P)
    ker = ext.nu.kernel()
    dims = ext.algebra.space.split_dims(ker.rows)
    return HomologyResult(2, dims, [dict(r) for r in ker.rows])


# ---------------------------------------------------------------------------
# Hopf formula via free nilpotent covers


@dataclass
class HopfResult:
    dims: tuple[int, int]
    subquotient: Subquotient
    cover: LieSuperAlgebra
    presented: LieSuperAlgebra
    relator_ideal: Subspace

    @property
    def dim(self) -> int:
        return self.dims[0] + self.dims[1]


def hopf_formula(pres: Presentation, class_bound: int, field: Field | None = None) -> HopfResult:
    """H_2 of the class-bounded presented algebra as (R ^ [F,F]) / [F,R],
    computed in the free nilpotent cover of class class_bound + 1.

    The cover is faithful: with R containing gamma_{c+1}, every term of
    the quotient already lives in F/gamma_{c+2} because gamma_{c+2} =
    [F, gamma_{c+1}] is contained in [F, R].
    """
    field = field or Field()
    try:
        trunc = free_truncated(pres.gens, class_bound + 1, field)
    except ValueError as exc:
        raise ClassExceeded(str(exc)) from exc
    cover = trunc.algebra()
    rel_vecs = []
    for w in pres.relators:
        if word_degree(w) > class_bound + 1:
            raise ClassExceeded(
                f"relator of degree {word_degree(w)} cannot be truncated at class {class_bound}"
            )
        rel_vecs.append(trunc.word_to_algebra_vec(w))
    # R contains gamma_{c+1}: the top-degree component of the cover
    off = trunc.degree_offset(class_bound + 1)
    gamma_top = [{i: 1} for i in range(off, cover.dim)]
    R = ideal_closure(cover, rel_vecs + gamma_top)
    full = cover.full_subspace()
    commutator = cover.product_subspace(full, full)
    FR = cover.product_subspace(full, R)
    top = R.intersect(commutator)
    sq = Subquotient(top, FR)
    dims = cover.space.split_dims(sq.section)
    presented, _ = quotient_algebra(cover, R, name="presented")
    return HopfResult(dims, sq, cover, presented, R)


# ---------------------------------------------------------------------------
# non-abelian homology


@dataclass
class NHResult:
    nh0: QuotientSpace
    nh1: QuotientSpace
    tensor: TensorProduct
    nu_to_m: GradedMap  # P (x) M -> M in ambient M coordinates


def crossed_pullback_actions(cm: CrossedModule) -> tuple[Action, Action]:
    """Mutual actions of P and M induced by a crossed module d: M -> P:
    P acts as given, M acts on P through the boundary."""
    P, M = cm.p, cm.m
    table = {}
    for m in range(M.dim):
        dm = cm.boundary.apply({m: 1})
        for p in range(P.dim):
            v = P.bracket(dm, {p: 1})
            if v:
                table[(m, p)] = v
    act_mp = Action(M, P, table, name="via-boundary")
    return cm.action, act_mp


def nh(P: LieSuperAlgebra, cm: CrossedModule,
       tensor: TensorProduct | None = None) -> NHResult:
    """Zero and first non-abelian homology of P with coefficients in the
    crossed module: cokernel and kernel of p (x) m -> p.m."""
    act_pm, act_mp = crossed_pullback_actions(cm)
    t = tensor if tensor is not None else nonabelian_tensor(P, cm.m, act_pm, act_mp)
    nu = t.nu  # to M, in M coordinates
    M = cm.m
    im = nu.image()
    nh0 = quotient_space(M.space, Subspace.full(M.field, M.dim), im, "h0.")
    ker = nu.kernel()
    nh1 = sub_space(t.algebra.space, ker, "h1.")
    return NHResult(nh0, nh1, t, nu)


# ---------------------------------------------------------------------------
# the connecting six-term sequence for short exact sequences of crossed modules


@dataclass
class CrossedSES:
    """0 -> (L, 0) -> (M, d) -> (N, d') -> 0 over a common P."""

    p: LieSuperAlgebra
    l: CrossedModule
    m: CrossedModule
    n: CrossedModule
    f: GradedMap  # L -> M
    g: GradedMap  # M -> N

    def validate(self) -> None:
        if self.f.kernel().dim != 0:
            raise ValueError("the left map of the sequence is not injective")
        if self.g.matrix.rank() != self.n.m.dim:
            raise ValueError("the right map of the sequence is not surjective")
        if self.f.image() != self.g.kernel():
            raise ValueError("the sequence is not exact in the middle")
        if not self.l.boundary.is_zero():
            raise ValueError("the left coefficient must have zero boundary")
        comp = self.m.boundary.compose(self.f)
        if not comp.is_zero():
            raise ValueError("boundary of M does not restrict to zero on L")
        dn_g = self.n.boundary.compose(self.g)
        diff = dn_g.matrix.add(self.m.boundary.matrix.scale(-1))
        if not diff.is_zero():
            raise ValueError("boundaries are not compatible with the right map")
        for p in range(self.p.dim):
            for i in range(self.l.m.dim):
                lhs = self.f.apply(self.l.action.act_basis(p, i))
                rhs = self.m.action.act({p: 1}, self.f.apply({i: 1}))
                if vec_clean({k: lhs.get(k, 0) - rhs.get(k, 0) for k in set(lhs) | set(rhs)}):
                    raise ValueError("left map is not equivariant")
            for i in range(self.m.m.dim):
                lhs = self.g.apply(self.m.action.act_basis(p, i))
                rhs = self.n.action.act({p: 1}, self.g.apply({i: 1}))
                if vec_clean({k: lhs.get(k, 0) - rhs.get(k, 0) for k in set(lhs) | set(rhs)}):
                    raise ValueError("right map is not equivariant")


@dataclass
class SixTermReport:
    ok: bool
    labels: list[str]
    dims: list[tuple[int, int]]
    exactness: ExactnessReport


def snake_sequence(ses: CrossedSES) -> SixTermReport:
    """The six-term sequence

    nh1(P,L) -> nh1(P,M) -> nh1(P,N) -> nh0(P,L) -> nh0(P,M) -> nh0(P,N) -> 0

    built map by map and certified exact at every node."""
    ses.validate()
    P = ses.p
    r_l = nh(P, ses.l)
    r_m = nh(P, ses.m)
    r_n = nh(P, ses.n)
    ind_f = induced_tensor_map(r_l.tensor, r_m.tensor, GradedMap.identity(P.space), ses.f)
    ind_g = induced_tensor_map(r_m.tensor, r_n.tensor, GradedMap.identity(P.space), ses.g)

    m1 = connect(r_l.nh1, r_m.nh1, ind_f.apply)
    m2 = connect(r_m.nh1, r_n.nh1, ind_g.apply)

    def connecting(v: dict) -> dict:
        x = ind_g.matrix.solve(v)
        if x is None:
            raise ComplexInconsistent("induced map is not surjective on a kernel class")
        w = r_m.nu_to_m.apply(x)  # in M, lands in the image of f
        y = ses.f.matrix.solve(w)
        if y is None:
            raise ComplexInconsistent("connecting element does not pull back")
        return y

    m3 = connect(r_n.nh1, r_l.nh0, connecting)
    m4 = connect(r_l.nh0, r_m.nh0, ses.f.apply)
    m5 = connect(r_m.nh0, r_n.nh0, ses.g.apply)
    m6 = zero_map_to_point(r_n.nh0.space)

    maps = [m1, m2, m3, m4, m5, m6]
    report = exactness_check(maps)
    labels = ["nh1(P,L)", "nh1(P,M)", "nh1(P,N)", "nh0(P,L)", "nh0(P,M)", "nh0(P,N)"]
    dims = [r_l.nh1.dims, r_m.nh1.dims, r_n.nh1.dims,
            r_l.nh0.dims, r_m.nh0.dims, r_n.nh0.dims]
    return SixTermReport(report.ok, labels, dims, report)


# ---------------------------------------------------------------------------
# the homology six-term sequence of an ideal


def _descend_exterior_map(ind: GradedMap, e_src: ExteriorProduct,
                          e_dst: ExteriorProduct) -> GradedMap:
    """Push a tensor-level induced map down to the exterior quotients."""
    for r in e_src.square.rows:
        if vec_clean(e_dst.projection.apply(ind.apply(r))):
            raise ComplexInconsistent("induced map does not preserve the square ideals")
    cols = [e_dst.projection.apply(ind.apply(s)) for s in e_src.sq.section]
    return GradedMap.from_columns(e_src.algebra.space, e_dst.algebra.space, cols)


def ideal_sixterm(P: LieSuperAlgebra, M: Subspace) -> SixTermReport:
    """The sequence

    Ker(P^M -> P) -> H2(P) -> H2(P/M) -> M/[P,M] -> H1(P) -> H1(P/M) -> 0

    for a graded ideal M, with H2 realized as the kernel of the exterior
    square over the bracket (certified to match the chain complex by the
    degree-2 comparison lemma)."""
    if not is_graded_ideal(P, M):
        raise NotAnIdeal("the six-term sequence requires a graded ideal")
    field = P.field
    mview = subalgebra_on(P, M, name="M")
    Q, proj = quotient_algebra(P, M, name="P/M")

    cm_p = identity_crossed(P)
    cm_m = ideal_crossed(P, mview)
    act_pm, act_mp = crossed_pullback_actions(cm_m)
    t_pm = nonabelian_tensor(P, mview.algebra, act_pm, act_mp)
    e_pm = nonabelian_exterior(t_pm, cm_p, cm_m)
    e_pp = exterior_square(P)
    e_qq = exterior_square(Q)

    t_pp = e_pp.tensor
    t_qq = e_qq.tensor
    ident = GradedMap.identity(P.space)
    ind_incl = _descend_exterior_map(
        induced_tensor_map(t_pm, t_pp, ident, mview.inclusion), e_pm, e_pp)
    ind_proj = _descend_exterior_map(
        induced_tensor_map(t_pp, t_qq, proj, proj), e_pp, e_qq)

    ker_pm = sub_space(e_pm.algebra.space, e_pm.mu.kernel(), "kPM.")
    h2_p = sub_space(e_pp.algebra.space, e_pp.nu.kernel(), "h2P.")
    h2_q = sub_space(e_qq.algebra.space, e_qq.nu.kernel(), "h2Q.")
    full_p = Subspace.full(field, P.dim)
    m_mod = quotient_space(P.space, M, P.product_subspace(full_p, M), "m.")
    h1_p = quotient_space(P.space, full_p, P.product_subspace(full_p, full_p), "h1P.")
    full_q = Subspace.full(field, Q.dim)
    h1_q = quotient_space(Q.space, full_q, Q.product_subspace(full_q, full_q), "h1Q.")

    m1 = connect(ker_pm, h2_p, ind_incl.apply)
    m2 = connect(h2_p, h2_q, ind_proj.apply)

    def connecting(v: dict) -> dict:
        x = ind_proj.matrix.solve(v)
        if x is None:
            raise ComplexInconsistent("exterior projection is not surjective on a kernel class")
        w = e_pp.nu.apply(x)  # in P; lands in M because v is a kernel class
        if not M.contains_vec(w):
            raise ComplexInconsistent("connecting element escapes the ideal")
        return w

    m3 = connect(h2_q, m_mod, connecting)
    m4 = connect(m_mod, h1_p, lambda v: v)
    m5 = connect(h1_p, h1_q, proj.apply)
    m6 = zero_map_to_point(h1_q.space)

    maps = [m1, m2, m3, m4, m5, m6]
    report = exactness_check(maps)
    labels = ["Ker(P^M->P)", "H2(P)", "H2(P/M)", "M/[P,M]", "H1(P)", "H1(P/M)"]
    dims = [ker_pm.dims, h2_p.dims, h2_q.dims, m_mod.dims, h1_p.dims, h1_q.dims]
    return SixTermReport(report.ok, labels, dims, report)
