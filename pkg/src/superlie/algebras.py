"""Lie and associative superalgebras given by structure constants.

A Lie superalgebra stores its bracket on ordered basis pairs i < j plus
odd diagonal pairs i = j; values for i > j follow from graded
antisymmetry and even diagonals vanish, so those two axioms hold by
construction and the checker certifies parity consistency and the graded
Jacobi identity, reporting witnesses for violations.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from itertools import combinations_with_replacement, permutations

from .fields import Field
from .linalg import (
    Echelon,
    Matrix,
    Subquotient,
    Subspace,
    vec_axpy,
    vec_clean,
    vec_scale,
    vec_sub,
)
from .spaces import GradedMap, SuperSpace, superspace


class SizeError(ValueError):
    """A matrix-algebra size constraint fails."""


class NotAnIdeal(ValueError):
    """The given subspace is not a graded ideal."""


@dataclass
class Violation:
    kind: str
    witness: tuple
    defect: dict

    def __str__(self):
        return f"{self.kind} at {self.witness}: defect {self.defect}"


@dataclass
class AxiomReport:
    ok: bool
    violations: list[Violation] = dfield(default_factory=list)

    def __bool__(self):
        return self.ok


def _pair_sign(pi: int, pj: int) -> int:
    """Sign relating [e_j,e_i] to [e_i,e_j]: -(-1)^{|i||j|}."""
    return 1 if pi * pj == 1 else -1


class LieSuperAlgebra:
    """Structure constants on a homogeneous ordered basis."""

    def __init__(self, space: SuperSpace, table: dict[tuple[int, int], dict], name: str = ""):
        self.space = space
        self.name = name
        self.field = space.field
        tab: dict[tuple[int, int], dict] = {}
        for (i, j), v in table.items():
            if i > j:
                raise ValueError("structure constants must be given for i <= j")
            if i == j and space.parities[i] == 0:
                raise ValueError("even diagonal brackets are forced to vanish")
            v = vec_clean({k: self.field.of(c) for k, c in v.items()})
            if v:
                tab[(i, j)] = v
        self.table = tab
        self._ad_cache: list[Matrix] | None = None

    @property
    def dim(self) -> int:
        return self.space.dim

    def __repr__(self):
        return f"LieSuperAlgebra({self.name or 'anon'}, dim {self.space})"

    # -- bracket -------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict:
        if i < j or (i == j and self.space.parities[i] == 1):
            return self.table.get((i, j), {})
        if i == j:
            return {}
        base = self.table.get((j, i))
        if not base:
            return {}
        s = _pair_sign(self.space.parities[i], self.space.parities[j])
        return vec_scale(base, s)

    def bracket(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, ci in u.items():
            if ci == 0:
                continue
            for j, cj in v.items():
                c = ci * cj
                if c == 0:
                    continue
                b = self.bracket_basis(i, j)
                if b:
                    vec_axpy(out, c, b)
        if self.field.p is not None:
            out = {k: d % self.field.p for k, d in out.items() if d % self.field.p}
        return out

    def ad(self, i: int) -> Matrix:
        if self._ad_cache is None:
            self._ad_cache = [
                Matrix(self.field, self.dim, [self.bracket_basis(a, b) for b in range(self.dim)])
                for a in range(self.dim)
            ]
        return self._ad_cache[i]

    def ad_vec(self, v: dict) -> Matrix:
        m = Matrix.zero(self.field, self.dim, self.dim)
        for i, c in v.items():
            m = m.add(self.ad(i).scale(c))
        return m

    # -- subspace machinery ---------------------------------------------

    def full_subspace(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def product_subspace(self, a: Subspace, b: Subspace) -> Subspace:
        acc = Echelon(self.field, self.dim)
        for u in a.rows:
            for v in b.rows:
                acc.insert(self.bracket(u, v))
        return acc.subspace()

    def center(self) -> Subspace:
        n = self.dim
        cols = []
        for i in range(n):
            col: dict = {}
            for j in range(n):
                for k, c in self.bracket_basis(i, j).items():
                    col[j * n + k] = c
            cols.append(col)
        return Matrix(self.field, n * n, cols).kernel_basis()

    def is_abelian(self) -> bool:
        return not self.table


def check_lie_axioms(L: LieSuperAlgebra, max_violations: int = 16) -> AxiomReport:
    """Certify parity consistency, graded antisymmetry (structural), the
    vanishing of [x, x] for general even x, and the graded Jacobi identity
    on all basis triples."""
    violations: list[Violation] = []
    par = L.space.parities
    for (i, j), v in L.table.items():
        want = (par[i] + par[j]) % 2
        for k, c in v.items():
            if par[k] != want:
                violations.append(Violation("parity", (i, j, k), {k: c}))
    # [x0, x0] = 0 for general even x0: expanding over even basis pairs the
    # coefficient of a_i a_j is c_ij + c_ji (i < j) and c_ii on the diagonal;
    # both vanish under the storage convention, re-derived here explicitly.
    for i in range(L.dim):
        if par[i] == 0 and L.bracket_basis(i, i):
            violations.append(Violation("even-square", (i, i), L.bracket_basis(i, i)))
        for j in range(i + 1, L.dim):
            if par[i] == 0 and par[j] == 0:
                sym = dict(L.bracket_basis(i, j))
                vec_axpy(sym, 1, L.bracket_basis(j, i))
                if vec_clean(sym):
                    violations.append(Violation("even-square", (i, j), sym))
    for i in range(L.dim):
        for j in range(L.dim):
            sgn = -1 if par[i] * par[j] else 1
            for k in range(L.dim):
                lhs = L.bracket({i: 1}, L.bracket_basis(j, k))
                rhs = L.bracket(L.bracket_basis(i, j), {k: 1})
                vec_axpy(rhs, sgn, L.bracket({j: 1}, L.bracket_basis(i, k)))
                defect = vec_sub(lhs, rhs)
                if L.field.p is not None:
                    defect = {a: c % L.field.p for a, c in defect.items() if c % L.field.p}
                if vec_clean(defect):
                    violations.append(Violation("jacobi", (i, j, k), defect))
                    if len(violations) >= max_violations:
                        return AxiomReport(False, violations)
    return AxiomReport(not violations, violations)


class AssocSuperAlgebra:
    """Associative superalgebra by structure constants, optionally unital."""

    def __init__(self, space: SuperSpace, table: dict[tuple[int, int], dict],
                 unit: dict | None = None, name: str = ""):
        self.space = space
        self.name = name
        self.field = space.field
        self.table = {
            key: vec_clean({k: self.field.of(c) for k, c in v.items()})
            for key, v in table.items()
        }
        self.table = {key: v for key, v in self.table.items() if v}
        self.unit = vec_clean({k: self.field.of(c) for k, c in (unit or {}).items()}) or None

    @property
    def dim(self) -> int:
        return self.space.dim

    def __repr__(self):
        return f"AssocSuperAlgebra({self.name or 'anon'}, dim {self.space})"

    def product_basis(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def product(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                c = ci * cj
                if c == 0:
                    continue
                b = self.product_basis(i, j)
                if b:
                    vec_axpy(out, c, b)
        if self.field.p is not None:
            out = {k: d % self.field.p for k, d in out.items() if d % self.field.p}
        return out

    def is_supercommutative(self) -> bool:
        par = self.space.parities
        for i in range(self.dim):
            for j in range(self.dim):
                sgn = -1 if par[i] * par[j] else 1
                d = vec_sub(self.product_basis(i, j), vec_scale(self.product_basis(j, i), sgn))
                if self.field.p is not None:
                    d = {k: c % self.field.p for k, c in d.items() if c % self.field.p}
                if vec_clean(d):
                    return False
        return True


def check_assoc_axioms(A: AssocSuperAlgebra, max_violations: int = 16) -> AxiomReport:
    violations: list[Violation] = []
    par = A.space.parities
    for (i, j), v in A.table.items():
        want = (par[i] + par[j]) % 2
        for k, c in v.items():
            if par[k] != want:
                violations.append(Violation("parity", (i, j, k), {k: c}))
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = A.product(A.product_basis(i, j), {k: 1})
                rhs = A.product({i: 1}, A.product_basis(j, k))
                defect = vec_sub(lhs, rhs)
                if A.field.p is not None:
                    defect = {a: c % A.field.p for a, c in defect.items() if c % A.field.p}
                if vec_clean(defect):
                    violations.append(Violation("assoc", (i, j, k), defect))
                    if len(violations) >= max_violations:
                        return AxiomReport(False, violations)
    if A.unit is not None:
        for i in range(A.dim):
            left = A.product(A.unit, {i: 1})
            right = A.product({i: 1}, A.unit)
            for got, side in ((left, "unit-left"), (right, "unit-right")):
                defect = vec_sub(got, {i: 1})
                if A.field.p is not None:
                    defect = {a: c % A.field.p for a, c in defect.items() if c % A.field.p}
                if vec_clean(defect):
                    violations.append(Violation(side, (i,), defect))
    return AxiomReport(not violations, violations)


# ---------------------------------------------------------------------------
# constructors


def abelian(field: Field, even: int, odd: int, prefix: str = "a") -> LieSuperAlgebra:
    basis = [(f"{prefix}{i}", 0) for i in range(even)]
    basis += [(f"{prefix}{even + i}", 1) for i in range(odd)]
    return LieSuperAlgebra(superspace(field, basis), {}, name=f"abelian({even}|{odd})")


def heisenberg(field: Field) -> LieSuperAlgebra:
    """The 3-dimensional even Heisenberg algebra: [x, y] = z."""
    sp = superspace(field, [("x", 0), ("y", 0), ("z", 0)])
    return LieSuperAlgebra(sp, {(0, 1): {2: field.one}}, name="heis")


def lie_from_assoc(A: AssocSuperAlgebra, name: str = "") -> LieSuperAlgebra:
    """The Lie superalgebra on A with the graded commutator bracket."""
    par = A.space.parities
    table: dict[tuple[int, int], dict] = {}
    for i in range(A.dim):
        for j in range(i, A.dim):
            if i == j:
                if par[i] == 0:
                    continue
                v = vec_scale(A.product_basis(i, i), 2)
            else:
                # [a,b] = ab - (-1)^{|a||b|} ba
                sgn = -1 if par[i] * par[j] else 1
                v = vec_sub(A.product_basis(i, j), vec_scale(A.product_basis(j, i), sgn))
            v = vec_clean(v)
            if v:
                table[(i, j)] = v
    return LieSuperAlgebra(A.space, table, name=name or (A.name and f"lie({A.name})"))


def ground_assoc(field: Field) -> AssocSuperAlgebra:
    """The ground field as a one-dimensional associative superalgebra."""
    sp = superspace(field, [("1", 0)])
    return AssocSuperAlgebra(sp, {(0, 0): {0: field.one}}, unit={0: field.one}, name="K")


def matrix_assoc(m: int, n: int, A: AssocSuperAlgebra) -> AssocSuperAlgebra:
    """Matrix superalgebra on (m+n)x(m+n) matrices with entries in unital A;
    the generator with a in slot (i, j) has parity |i| + |j| + |a|."""
    if m + n < 1:
        raise SizeError("need at least one row")
    if A.unit is None:
        raise ValueError("coefficient algebra must be unital")
    size = m + n
    dimA = A.dim
    rowpar = [0 if i < m else 1 for i in range(size)]

    def idx(i, j, t):
        return (i * size + j) * dimA + t

    labels = []
    parities = []
    for i in range(size):
        for j in range(size):
            for t in range(dimA):
                labels.append(f"E{i + 1}{j + 1}({A.space.labels[t]})")
                parities.append((rowpar[i] + rowpar[j] + A.space.parities[t]) % 2)
    sp = SuperSpace(A.field, tuple(labels), tuple(parities))
    table: dict[tuple[int, int], dict] = {}
    for i in range(size):
        for j in range(size):
            for t in range(dimA):
                a = idx(i, j, t)
                for k in range(size):
                    if j != k:
                        continue
                    for l in range(size):
                        for u in range(dimA):
                            b = idx(k, l, u)
                            prod = A.product_basis(t, u)
                            if prod:
                                table[(a, b)] = {idx(i, l, s): c for s, c in prod.items()}
    unit = {}
    unit_of_A = A.unit
    for i in range(size):
        for t, c in unit_of_A.items():
            unit[idx(i, i, t)] = c
    name = f"M({m},{n},{A.name or '?'})"
    return AssocSuperAlgebra(sp, table, unit=unit, name=name)


def matrix_gl(m: int, n: int, A: AssocSuperAlgebra) -> LieSuperAlgebra:
    """gl(m, n, A): the matrix superalgebra with the supercommutator bracket."""
    out = lie_from_assoc(matrix_assoc(m, n, A), name=f"gl({m},{n},{A.name or '?'})")
    return out


def subalgebra_closure(L: LieSuperAlgebra, vectors: list[dict]) -> Subspace:
    """Smallest subspace containing the vectors and closed under the bracket."""
    acc = Echelon(L.field, L.dim)
    for v in vectors:
        acc.insert(v)
    while True:
        rows = [dict(r) for r in acc.subspace().rows]
        grew = False
        for a in range(len(rows)):
            for b in range(a, len(rows)):
                if acc.insert(L.bracket(rows[a], rows[b])):
                    grew = True
        if not grew:
            return acc.subspace()


def ideal_closure(L: LieSuperAlgebra, vectors: list[dict]) -> Subspace:
    """Smallest bracket ideal containing the vectors: iterate span + [L, span]."""
    acc = Echelon(L.field, L.dim)
    for v in vectors:
        acc.insert(v)
    while True:
        rows = [dict(r) for r in acc.subspace().rows]
        grew = False
        for i in range(L.dim):
            for r in rows:
                if acc.insert(L.bracket({i: 1}, r)):
                    grew = True
        if not grew:
            return acc.subspace()


def is_graded_ideal(L: LieSuperAlgebra, I: Subspace) -> bool:
    for r in I.rows:
        if L.space.parity_of_vec(r) is None:
            return False
    for i in range(L.dim):
        for r in I.rows:
            if not I.contains_vec(L.bracket({i: 1}, r)):
                return False
    return True


@dataclass
class SeriesReport:
    lower_central: list[Subspace]
    derived: list[Subspace]
    center: Subspace
    nil_class: int | None
    derived_length: int | None
    is_perfect: bool

    @property
    def is_nilpotent(self) -> bool:
        return self.nil_class is not None

    @property
    def is_solvable(self) -> bool:
        return self.derived_length is not None


def series(L: LieSuperAlgebra) -> SeriesReport:
    full = L.full_subspace()
    lower = [full]
    while True:
        nxt = L.product_subspace(full, lower[-1])
        if nxt.dim == lower[-1].dim:
            break
        lower.append(nxt)
        if nxt.dim == 0:
            break
    derived = [full]
    while True:
        nxt = L.product_subspace(derived[-1], derived[-1])
        if nxt.dim == derived[-1].dim:
            break
        derived.append(nxt)
        if nxt.dim == 0:
            break
    nil_class = len(lower) - 1 if lower[-1].dim == 0 else None
    if L.dim == 0:
        nil_class = 0
    der_length = len(derived) - 1 if derived[-1].dim == 0 else None
    if L.dim == 0:
        der_length = 0
    gamma2 = L.product_subspace(full, full)
    return SeriesReport(
        lower_central=lower,
        derived=derived,
        center=L.center(),
        nil_class=nil_class,
        derived_length=der_length,
        is_perfect=(gamma2.dim == L.dim),
    )


def is_engel(L: LieSuperAlgebra, n: int) -> bool:
    """Whether ad(x)^n = 0 for every x, via the symmetrized operator sums of
    the multilinear expansion.  Exact over Q; over GF(p) this is a
    sufficient condition only (documented limitation)."""
    if n < 1:
        raise ValueError("Engel degree must be >= 1")
    dim = L.dim
    for multiset in combinations_with_replacement(range(dim), n):
        total = Matrix.zero(L.field, dim, dim)
        for perm in set(permutations(multiset)):
            prod = Matrix.identity(L.field, dim)
            for i in perm:
                prod = prod.compose(L.ad(i))
            total = total.add(prod)
        if not total.is_zero():
            return False
    return True


def engel_degree(L: LieSuperAlgebra, bound: int) -> int | None:
    for n in range(1, bound + 1):
        if is_engel(L, n):
            return n
    return None


# ---------------------------------------------------------------------------
# subalgebras on subspaces, quotients


@dataclass
class AlgebraView:
    """A Lie superalgebra living on a subspace of another one."""

    algebra: LieSuperAlgebra
    inclusion: GradedMap  # basis of the view expressed in the parent
    subspace: Subspace

    def coords(self, parent_vec: dict) -> dict | None:
        """View coordinates of an ambient vector, or None if outside."""
        cs = self.subspace.coords(parent_vec)
        if cs is None:
            return None
        return vec_clean(dict(enumerate(cs)))


def _view_labels(parent: SuperSpace, rows: list[dict], wrap: str) -> list[tuple[str, int]]:
    out = []
    for r in rows:
        par = parent.parity_of_vec(r)
        if par is None:
            raise NotAnIdeal("subspace is not spanned by homogeneous vectors")
        lead = parent.labels[min(r)]
        out.append((wrap.format(lead), par))
    return out


def subalgebra_on(L: LieSuperAlgebra, S: Subspace, name: str = "") -> AlgebraView:
    """The Lie superalgebra structure on a bracket-closed, parity-split subspace."""
    rows = S.rows
    basis = _view_labels(L.space, rows, "{}'")
    sp = superspace(L.field, basis)
    table: dict[tuple[int, int], dict] = {}
    for a in range(len(rows)):
        for b in range(a, len(rows)):
            if a == b and sp.parities[a] == 0:
                continue
            prod = L.bracket(rows[a], rows[b])
            coords = S.coords(prod)
            if coords is None:
                raise NotAnIdeal("subspace is not closed under the bracket")
            v = vec_clean({k: c for k, c in enumerate(coords)})
            if v:
                table[(a, b)] = v
    alg = LieSuperAlgebra(sp, table, name=name)
    incl = GradedMap.from_columns(sp, L.space, [dict(r) for r in rows])
    return AlgebraView(alg, incl, S)


def quotient_algebra(L: LieSuperAlgebra, I: Subspace, name: str = "") -> tuple[LieSuperAlgebra, GradedMap]:
    """Quotient by a graded ideal, with the projection as a graded map."""
    if not is_graded_ideal(L, I):
        raise NotAnIdeal("quotient requires a graded ideal")
    sq = Subquotient(L.full_subspace(), I)
    basis = _view_labels(L.space, sq.section, "[{}]")
    sp = superspace(L.field, basis)
    table: dict[tuple[int, int], dict] = {}
    for a in range(sq.dim):
        for b in range(a, sq.dim):
            if a == b and sp.parities[a] == 0:
                continue
            prod = L.bracket(sq.section[a], sq.section[b])
            v = vec_clean(dict(enumerate(sq.reduce(prod))))
            if v:
                table[(a, b)] = v
    alg = LieSuperAlgebra(sp, table, name=name or (L.name and f"{L.name}/I"))
    cols = [vec_clean(dict(enumerate(sq.reduce({i: 1})))) for i in range(L.dim)]
    proj = GradedMap.from_columns(L.space, sp, cols)
    return alg, proj


def abelianization(L: LieSuperAlgebra) -> tuple[LieSuperAlgebra, GradedMap]:
    gamma2 = L.product_subspace(L.full_subspace(), L.full_subspace())
    return quotient_algebra(L, gamma2, name=(L.name and f"{L.name}^ab"))


def matrix_sl(m: int, n: int, A: AssocSuperAlgebra) -> AlgebraView:
    """sl(m, n, A): the subalgebra of gl(m, n, A) generated by the
    off-diagonal matrix units, as the bracket closure of their span."""
    if m + n < 3:
        raise SizeError("sl(m, n, A) requires m + n >= 3")
    gl = matrix_gl(m, n, A)
    size = m + n
    dimA = A.dim
    gens = []
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            for t in range(dimA):
                gens.append({(i * size + j) * dimA + t: 1})
    S = subalgebra_closure(gl, gens)
    view = subalgebra_on(gl, S, name=f"sl({m},{n},{A.name or '?'})")
    return view
