"""Degree-truncated free Lie superalgebras and presentations.

The free Lie superalgebra on a graded generating set embeds into its
tensor superalgebra in characteristic zero, so each degree component is
realized as the span of left-normed supercommutators inside the tensor
power, and the truncated bracket table is read off by echelon
coordinates.  This linear realization is the production path; the
magma-quotient construction lives in the test suite as an independent
oracle for the component dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import LieSuperAlgebra
from .fields import Field
from .linalg import Echelon, Subspace, vec_clean
from .spaces import SuperSpace, superspace


class FieldUnsupported(ValueError):
    """Free objects are realized over the rationals only."""


class DegreeOverflow(ValueError):
    """A bracket word exceeds the truncation degree."""


MAX_GENERATORS = 4
MAX_DEGREE = 5


@dataclass(frozen=True)
class GradedGenSet:
    generators: tuple[tuple[str, int], ...]

    def __post_init__(self):
        labels = [g[0] for g in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate generator labels")

    @property
    def count(self) -> int:
        return len(self.generators)


def genset(gens: list[tuple[str, int]]) -> GradedGenSet:
    return GradedGenSet(tuple(gens))


# A bracket word is a generator label or a pair [w1, w2]; a relator may
# also be a scalar combination {"sum": [{"coeff": c, "word": w}, ...]}
# whose terms all share one parity.


def word_degree(word) -> int:
    if isinstance(word, str):
        return 1
    if isinstance(word, dict):
        return max(word_degree(t["word"]) for t in word["sum"])
    a, b = word
    return word_degree(a) + word_degree(b)


def word_parity(word, gens: GradedGenSet) -> int:
    if isinstance(word, str):
        for label, par in gens.generators:
            if label == word:
                return par
        raise KeyError(f"unknown generator {word!r}")
    if isinstance(word, dict):
        parities = {word_parity(t["word"], gens) for t in word["sum"]}
        if len(parities) != 1:
            raise ValueError("relator terms have mixed parities")
        return parities.pop()
    a, b = word
    return (word_parity(a, gens) + word_parity(b, gens)) % 2


def word_str(word) -> str:
    if isinstance(word, str):
        return word
    if isinstance(word, dict):
        return " + ".join(f"{t['coeff']}*{word_str(t['word'])}" for t in word["sum"])
    a, b = word
    return f"[{word_str(a)},{word_str(b)}]"


class FreeTruncation:
    """Components of the free Lie superalgebra up to a degree bound, with
    the structure constants of the corresponding free nilpotent quotient."""

    def __init__(self, gens: GradedGenSet, max_degree: int, field: Field):
        if field.p is not None:
            raise FieldUnsupported("free Lie superalgebras require characteristic 0")
        if gens.count > MAX_GENERATORS:
            raise ValueError(f"at most {MAX_GENERATORS} generators supported")
        if not 1 <= max_degree <= MAX_DEGREE:
            raise ValueError(f"degree must be between 1 and {MAX_DEGREE}")
        self.gens = gens
        self.max_degree = max_degree
        self.field = field
        self._algebra = None
        g = gens.count
        self.gen_space = superspace(field, list(gens.generators))
        # tensor-power parities: degree-k slot index is a base-g numeral
        self._tensor_parity: list[list[int]] = [[]]
        for k in range(1, max_degree + 1):
            pars = []
            for idx in range(g ** k):
                total = 0
                rest = idx
                for _ in range(k):
                    total += gens.generators[rest % g][1]
                    rest //= g
                pars.append(total % 2)
            self._tensor_parity.append(pars)
        # degree components inside V^{(x) k}: spans of left-normed commutators
        self.components: list[Subspace] = [Subspace(field, 1, [])]
        self._span_vectors: list[list[dict]] = [[]]
        deg1 = [( {i: 1}, gens.generators[i][1]) for i in range(g)]
        comp1 = Echelon(field, g)
        for v, _ in deg1:
            comp1.insert(v)
        self.components.append(comp1.subspace())
        self._span_vectors.append([dict(v) for v, _ in deg1])
        prev = deg1  # (vector in V^{(x)(k-1)}, parity)
        for k in range(2, max_degree + 1):
            acc = Echelon(field, g ** k)
            new_vs = []
            for w, pw in prev:
                for i in range(g):
                    pg = gens.generators[i][1]
                    v = self._supercommutator(w, pw, {i: 1}, pg, k - 1, 1)
                    if v and acc.insert(v):
                        new_vs.append((v, (pw + pg) % 2))
            self.components.append(acc.subspace())
            self._span_vectors.append([dict(v) for v, _ in new_vs])
            prev = new_vs

    def _supercommutator(self, u: dict, pu: int, v: dict, pv: int, du: int, dv: int) -> dict:
        """[u, v] = u(x)v - (-1)^{|u||v|} v(x)u inside V^{(x)(du+dv)}."""
        g = self.gens.count
        shift_u = g ** dv
        shift_v = g ** du
        out: dict = {}
        for a, ca in u.items():
            for b, cb in v.items():
                c = ca * cb
                if c == 0:
                    continue
                k1 = a * shift_u + b
                out[k1] = out.get(k1, 0) + c
                k2 = b * shift_v + a
                s = -1 if not (pu * pv) else 1
                out[k2] = out.get(k2, 0) + s * c
        return vec_clean(out)

    def dims(self) -> list[int]:
        """Component dimensions for degrees 1..max_degree."""
        return [self.components[k].dim for k in range(1, self.max_degree + 1)]

    # -- the truncated algebra -----------------------------------------

    def degree_offset(self, k: int) -> int:
        return sum(self.components[d].dim for d in range(1, k))

    @property
    def total_dim(self) -> int:
        return self.degree_offset(self.max_degree + 1)

    def algebra(self) -> LieSuperAlgebra:
        """The free nilpotent quotient of class max_degree (memoized)."""
        if self._algebra is not None:
            return self._algebra
        field = self.field
        labels: list[str] = []
        parities: list[int] = []
        basis_info: list[tuple[int, int]] = []  # (degree, index within component)
        for k in range(1, self.max_degree + 1):
            comp = self.components[k]
            for t, row in enumerate(comp.rows):
                par = self._tensor_parity[k][min(row)]
                if k == 1:
                    labels.append(self.gens.generators[t][0])
                else:
                    labels.append(f"w{k}.{t}")
                parities.append(par)
                basis_info.append((k, t))
        sp = SuperSpace(field, tuple(labels), tuple(parities))
        table: dict[tuple[int, int], dict] = {}
        n = len(labels)
        for a in range(n):
            ka, ta = basis_info[a]
            row_a = self.components[ka].rows[ta]
            pa = parities[a]
            for b in range(a, n):
                kb, tb = basis_info[b]
                if a == b and parities[a] == 0:
                    continue
                k = ka + kb
                if k > self.max_degree:
                    continue
                row_b = self.components[kb].rows[tb]
                prod = self._supercommutator(row_a, pa, row_b, parities[b], ka, kb)
                coords = self.components[k].coords(prod)
                if coords is None:
                    raise RuntimeError("free component is not closed under brackets")
                off = self.degree_offset(k)
                v = vec_clean({off + i: c for i, c in enumerate(coords)})
                if v:
                    table[(a, b)] = v
        name = f"free({','.join(l for l, _ in self.gens.generators)};c{self.max_degree})"
        self._algebra = LieSuperAlgebra(sp, table, name=name)
        return self._algebra

    def evaluate_word(self, word) -> tuple[int, dict]:
        """Evaluate a bracket word; returns (degree, vector in V^{(x)degree})."""
        if isinstance(word, str):
            for i, (label, _) in enumerate(self.gens.generators):
                if label == word:
                    return 1, {i: 1}
            raise KeyError(f"unknown generator {word!r}")
        a, b = word
        da, va = self.evaluate_word(a)
        db, vb = self.evaluate_word(b)
        if da + db > self.max_degree:
            raise DegreeOverflow(f"word degree {da + db} exceeds truncation {self.max_degree}")
        pa = word_parity(a, self.gens)
        pb = word_parity(b, self.gens)
        return da + db, self._supercommutator(va, pa, vb, pb, da, db)

    def word_to_algebra_vec(self, word) -> dict:
        """Coordinates of a bracket word (or scalar combination of words)
        in the truncated algebra basis."""
        if isinstance(word, dict):
            out: dict = {}
            for term in word["sum"]:
                c = self.field.parse(str(term["coeff"]))
                for k, v in self.word_to_algebra_vec(term["word"]).items():
                    out[k] = out.get(k, 0) + c * v
            return vec_clean(out)
        k, v = self.evaluate_word(word)
        if not v:
            return {}
        coords = self.components[k].coords(v)
        if coords is None:
            raise RuntimeError("word evaluates outside its free component")
        off = self.degree_offset(k)
        return vec_clean({off + i: c for i, c in enumerate(coords)})


def free_truncated(gens: GradedGenSet, d: int, field: Field = Field()) -> FreeTruncation:
    return FreeTruncation(gens, d, field)


def free_nilpotent(gens: GradedGenSet, c: int, field: Field = Field()) -> LieSuperAlgebra:
    return FreeTruncation(gens, c, field).algebra()


@dataclass
class Presentation:
    """Generators with parities and relator bracket words (each parity
    homogeneous); presents the class-bounded quotient F/(relators + gamma_{c+1})."""

    gens: GradedGenSet
    relators: tuple

    def __post_init__(self):
        for w in self.relators:
            word_parity(w, self.gens)  # validates labels and homogeneity


def evaluate_relator(F: FreeTruncation, word):
    """The relator as a graded vector of the truncated algebra."""
    from .spaces import GradedVector

    return GradedVector.of(F.algebra().space, F.word_to_algebra_vec(word))


@dataclass
class MillerReport:
    ok: bool
    kernel_dims: tuple[int, int]
    truncation_dims: tuple[int, int]
    class_bound: int


def miller_truncated_check(gens: GradedGenSet, c: int, field: Field | None = None) -> MillerReport:
    """Truncation-corrected injectivity of x ^ y -> [x, y] on free objects:
    on the free nilpotent quotient of class c the kernel of the exterior
    square over the bracket consists exactly of the brackets destroyed by
    the truncation, so its dimension equals the degree-(c+1) component of
    the free Lie superalgebra."""
    from .tensor import exterior_square

    field = field or Field()
    trunc = free_truncated(gens, c + 1, field)
    algebra = FreeTruncation(gens, c, field).algebra()
    ext = exterior_square(algebra)
    ker = ext.nu.kernel()
    kernel_dims = ext.algebra.space.split_dims(ker.rows)
    top = trunc.components[c + 1]
    d0 = d1 = 0
    for row in top.rows:
        if trunc._tensor_parity[c + 1][min(row)] == 0:
            d0 += 1
        else:
            d1 += 1
    return MillerReport(kernel_dims == (d0, d1), kernel_dims, (d0, d1), c)
