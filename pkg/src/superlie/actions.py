"""Actions of Lie superalgebras, compatibility, crossed modules, semidirect
products.

An action of P on M is an even bilinear map (p, m) -> p.m satisfying

    [p,p'].m = p.(p'.m) - (-1)^{|p||p'|} p'.(p.m)
    p.[m,m'] = [p.m, m'] + (-1)^{|p||m|} [m, p.m']

Mutual actions of M and N are compatible when acting through an acted
element collapses to a bracket:

    (n.m).n' = -(-1)^{|m||n|} [m.n, n']     and symmetrically.

A crossed module is an even Lie homomorphism d: M -> P with a P-action on
M that is equivariant (d(p.m) = [p, d m]) and satisfies the Peiffer
identity (d(m).m' = [m, m']).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .algebras import (
    AxiomReport,
    LieSuperAlgebra,
    Violation,
    is_graded_ideal,
)
from .linalg import vec_axpy, vec_clean, vec_scale, vec_sub
from .spaces import GradedMap, SuperSpace


class ActionInvalid(ValueError):
    """A construction received an action that fails its axioms."""


class IncompatibleActions(ValueError):
    """Mutual actions fail the compatibility identities."""


class Action:
    """Bilinear action constants of ``actor`` on ``target``."""

    def __init__(self, actor: LieSuperAlgebra, target: LieSuperAlgebra,
                 table: dict[tuple[int, int], dict], name: str = ""):
        self.actor = actor
        self.target = target
        self.name = name
        self.field = actor.field
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

    def is_trivial(self) -> bool:
        return not self.table

    def __repr__(self):
        return f"Action({self.name or 'anon'})"


def trivial_action(actor: LieSuperAlgebra, target: LieSuperAlgebra) -> Action:
    return Action(actor, target, {}, name="trivial")


def adjoint_action(L: LieSuperAlgebra) -> Action:
    """The self-action by the bracket."""
    table = {}
    for i in range(L.dim):
        for j in range(L.dim):
            v = L.bracket_basis(i, j)
            if v:
                table[(i, j)] = v
    return Action(L, L, table, name="adjoint")


def subspace_bracket_action(L: LieSuperAlgebra, actor_view, target_view) -> Action:
    """Action of one subalgebra view of L on another induced by the bracket
    (the target must be stable, e.g. an ideal)."""
    table = {}
    arows = actor_view.inclusion.matrix.cols
    trows = target_view.inclusion.matrix.cols
    for p, pa in enumerate(arows):
        for m, tm in enumerate(trows):
            w = L.bracket(pa, tm)
            if not w:
                continue
            v = target_view.coords(w)
            if v is None:
                raise ActionInvalid("bracket leaves the target subspace")
            if v:
                table[(p, m)] = v
    return Action(actor_view.algebra, target_view.algebra, table, name="bracket")


def check_action(a: Action, max_violations: int = 16) -> AxiomReport:
    violations: list[Violation] = []
    P, M = a.actor, a.target
    pp, pm = P.space.parities, M.space.parities
    for (p, m), v in a.table.items():
        want = (pp[p] + pm[m]) % 2
        for k, c in v.items():
            if pm[k] != want:
                violations.append(Violation("action-parity", (p, m, k), {k: c}))
    for p in range(P.dim):
        for q in range(P.dim):
            sgn = -1 if pp[p] * pp[q] else 1
            for m in range(M.dim):
                lhs = a.act(P.bracket_basis(p, q), {m: 1})
                rhs = a.act({p: 1}, a.act_basis(q, m))
                vec_axpy(rhs, -sgn, a.act({q: 1}, a.act_basis(p, m)))
                defect = vec_sub(lhs, rhs)
                if a.field.p is not None:
                    defect = {k: c % a.field.p for k, c in defect.items() if c % a.field.p}
                if vec_clean(defect):
                    violations.append(Violation("action-i", (p, q, m), defect))
                    if len(violations) >= max_violations:
                        return AxiomReport(False, violations)
    for p in range(P.dim):
        for m in range(M.dim):
            sgn = -1 if pp[p] * pm[m] else 1
            for m2 in range(M.dim):
                lhs = a.act({p: 1}, M.bracket_basis(m, m2))
                rhs = M.bracket(a.act_basis(p, m), {m2: 1})
                vec_axpy(rhs, sgn, M.bracket({m: 1}, a.act_basis(p, m2)))
                defect = vec_sub(lhs, rhs)
                if a.field.p is not None:
                    defect = {k: c % a.field.p for k, c in defect.items() if c % a.field.p}
                if vec_clean(defect):
                    violations.append(Violation("action-ii", (p, m, m2), defect))
                    if len(violations) >= max_violations:
                        return AxiomReport(False, violations)
    return AxiomReport(not violations, violations)


def check_compatible(a_mn: Action, a_nm: Action, max_violations: int = 16) -> AxiomReport:
    """Compatibility of mutual actions: a_mn is the action of M on N and
    a_nm the action of N on M."""
    M, N = a_mn.actor, a_mn.target
    if a_nm.actor is not N and a_nm.actor != N:
        raise ValueError("actions are not between the same pair of algebras")
    violations: list[Violation] = []
    pm, pn = M.space.parities, N.space.parities
    for m in range(M.dim):
        for n in range(N.dim):
            sgn = -1 if pm[m] * pn[n] else 1
            nm = a_nm.act_basis(n, m)  # n.m in M
            mn = a_mn.act_basis(m, n)  # m.n in N
            for n2 in range(N.dim):
                lhs = a_mn.act(nm, {n2: 1})
                rhs = vec_scale(N.bracket(mn, {n2: 1}), -sgn)
                defect = vec_sub(lhs, rhs)
                if M.field.p is not None:
                    defect = {k: c % M.field.p for k, c in defect.items() if c % M.field.p}
                if vec_clean(defect):
                    violations.append(Violation("compat-i", (m, n, n2), defect))
                    if len(violations) >= max_violations:
                        return AxiomReport(False, violations)
            for m2 in range(M.dim):
                lhs = a_nm.act(mn, {m2: 1})
                rhs = vec_scale(M.bracket(nm, {m2: 1}), -sgn)
                defect = vec_sub(lhs, rhs)
                if M.field.p is not None:
                    defect = {k: c % M.field.p for k, c in defect.items() if c % M.field.p}
                if vec_clean(defect):
                    violations.append(Violation("compat-ii", (m, n, m2), defect))
                    if len(violations) >= max_violations:
                        return AxiomReport(False, violations)
    return AxiomReport(not violations, violations)


@dataclass
class CrossedModule:
    """(M, P, boundary, action): boundary an even Lie homomorphism M -> P,
    the action an action of P on M."""

    m: LieSuperAlgebra
    p: LieSuperAlgebra
    boundary: GradedMap
    action: Action
    name: str = ""

    def __post_init__(self):
        if self.boundary.degree != 0:
            raise ValueError("boundary must be of even degree")


def identity_crossed(P: LieSuperAlgebra) -> CrossedModule:
    return CrossedModule(P, P, GradedMap.identity(P.space), adjoint_action(P), name="id")


def supermodule_crossed(P: LieSuperAlgebra, M: LieSuperAlgebra, action: Action,
                        name: str = "supermodule") -> CrossedModule:
    """An abelian M with a P-action, as the crossed module with zero boundary."""
    return CrossedModule(M, P, GradedMap.zero(M.space, P.space), action, name=name)


def ideal_crossed(L: LieSuperAlgebra, view) -> CrossedModule:
    """The inclusion of a graded ideal (given as an AlgebraView) into L."""
    incl = view.inclusion
    table = {}
    for i in range(L.dim):
        for m in range(view.algebra.dim):
            w = L.bracket({i: 1}, incl.matrix.cols[m])
            if not w:
                continue
            v = view.coords(w)
            if v is None:
                raise ActionInvalid("subspace is not an ideal")
            if v:
                table[(i, m)] = v
    act = Action(L, view.algebra, table, name="bracket")
    return CrossedModule(view.algebra, L, incl, act, name="ideal")


@dataclass
class CrossedReport:
    ok: bool
    violations: list[Violation] = dfield(default_factory=list)
    kernel_central: bool = False
    image_ideal: bool = False
    kernel_module_ok: bool = False

    def __bool__(self):
        return self.ok


def check_crossed(c: CrossedModule, max_violations: int = 16) -> CrossedReport:
    """Certify the crossed module axioms together with their structural
    consequences: the kernel of the boundary is central, its image is a
    graded ideal, and the kernel carries a well-defined module structure
    over the cokernel of the boundary."""
    violations: list[Violation] = []
    M, P, d, act = c.m, c.p, c.boundary, c.action

    rep = check_action(act, max_violations)
    violations.extend(rep.violations)

    # boundary is a Lie homomorphism
    for i in range(M.dim):
        for j in range(M.dim):
            lhs = d.apply(M.bracket_basis(i, j))
            rhs = P.bracket(d.apply({i: 1}), d.apply({j: 1}))
            defect = vec_sub(lhs, rhs)
            if M.field.p is not None:
                defect = {k: v % M.field.p for k, v in defect.items() if v % M.field.p}
            if vec_clean(defect):
                violations.append(Violation("boundary-hom", (i, j), defect))
    # (i) equivariance, (ii) Peiffer
    for p in range(P.dim):
        for m in range(M.dim):
            lhs = d.apply(act.act_basis(p, m))
            rhs = P.bracket({p: 1}, d.apply({m: 1}))
            defect = vec_sub(lhs, rhs)
            if M.field.p is not None:
                defect = {k: v % M.field.p for k, v in defect.items() if v % M.field.p}
            if vec_clean(defect):
                violations.append(Violation("equivariance", (p, m), defect))
    for m in range(M.dim):
        for m2 in range(M.dim):
            lhs = act.act(d.apply({m: 1}), {m2: 1})
            rhs = M.bracket_basis(m, m2)
            defect = vec_sub(lhs, rhs)
            if M.field.p is not None:
                defect = {k: v % M.field.p for k, v in defect.items() if v % M.field.p}
            if vec_clean(defect):
                violations.append(Violation("peiffer", (m, m2), defect))

    if violations:
        return CrossedReport(False, violations)

    # consequences
    ker = d.kernel()
    center = M.center()
    kernel_central = center.contains(ker)
    img = d.image()
    image_ideal = is_graded_ideal(P, img)
    # induced module structure of Coker(d) on Ker(d): the image must act
    # trivially on the kernel and P must preserve the kernel
    kernel_module_ok = True
    for r in img.rows:
        for k in ker.rows:
            if vec_clean(act.act(r, k)):
                kernel_module_ok = False
    for p in range(P.dim):
        for k in ker.rows:
            if not ker.contains_vec(act.act({p: 1}, k)):
                kernel_module_ok = False
    ok = kernel_central and image_ideal and kernel_module_ok
    if not kernel_central:
        violations.append(Violation("kernel-not-central", (), {}))
    if not image_ideal:
        violations.append(Violation("image-not-ideal", (), {}))
    if not kernel_module_ok:
        violations.append(Violation("kernel-module", (), {}))
    return CrossedReport(ok, violations, kernel_central, image_ideal, kernel_module_ok)


def semidirect(a: Action, name: str = "") -> LieSuperAlgebra:
    """The semidirect product M x| P of an action of P on M, on M + P with

    [(m,p),(m',p')] = ([m,m'] + p.m' - (-1)^{|m||p'|} p'.m, [p,p'])."""
    rep = check_action(a)
    if not rep.ok:
        raise ActionInvalid(f"action fails its axioms: {rep.violations[:3]}")
    M, P = a.target, a.actor
    dm = M.dim
    labels = tuple(f"m.{l}" for l in M.space.labels) + tuple(f"p.{l}" for l in P.space.labels)
    parities = M.space.parities + P.space.parities
    sp = SuperSpace(M.field, labels, parities)

    def embed_m(v):
        return dict(v)

    def embed_p(v):
        return {dm + k: c for k, c in v.items()}

    def pair_bracket(m1, p1, m2, p2, par_m1, par_p2):
        out = embed_m(M.bracket(m1, m2))
        vec_axpy(out, 1, embed_m(a.act(p1, m2)))
        sgn = -1 if par_m1 * par_p2 else 1
        vec_axpy(out, -sgn, embed_m(a.act(p2, m1)))
        vec_axpy(out, 1, embed_p(P.bracket(p1, p2)))
        return out

    table: dict[tuple[int, int], dict] = {}
    total = dm + P.dim
    for i in range(total):
        for j in range(i, total):
            if i == j and parities[i] == 0:
                continue
            m1 = {i: 1} if i < dm else {}
            p1 = {i - dm: 1} if i >= dm else {}
            m2 = {j: 1} if j < dm else {}
            p2 = {j - dm: 1} if j >= dm else {}
            v = vec_clean(pair_bracket(m1, p1, m2, p2, parities[i], parities[j]))
            if v:
                table[(i, j)] = v
    return LieSuperAlgebra(sp, table, name=name or "semidirect")
