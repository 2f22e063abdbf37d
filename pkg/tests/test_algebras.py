import pytest

from oracles import explicit_matrix_bracket
from superlie.algebras import (
    LieSuperAlgebra,
    NotAnIdeal,
    SizeError,
    abelian,
    abelianization,
    check_assoc_axioms,
    check_lie_axioms,
    engel_degree,
    ground_assoc,
    heisenberg,
    ideal_closure,
    is_engel,
    lie_from_assoc,
    matrix_gl,
    matrix_sl,
    quotient_algebra,
    series,
    subalgebra_closure,
)
from superlie.cyclic import grassmann_line
from superlie.fields import Field, QQ
from superlie.linalg import Subspace
from superlie.spaces import superspace


def test_abelian_certified():
    for p, q in [(0, 0), (1, 0), (0, 1), (2, 3)]:
        alg = abelian(QQ, p, q)
        assert check_lie_axioms(alg).ok
        assert alg.space.dim_pair == (p, q)


def test_heisenberg(heis):
    rep = check_lie_axioms(heis)
    assert rep.ok
    s = series(heis)
    assert s.nil_class == 2
    assert s.derived_length == 2
    assert s.center.dim == 1
    assert not s.is_perfect


def test_gl11_certified(gl11):
    assert gl11.space.dim_pair == (2, 2)
    assert check_lie_axioms(gl11).ok


def test_gl20_is_even_gl2():
    g = matrix_gl(2, 0, ground_assoc(QQ))
    assert g.space.dim_pair == (4, 0)
    assert check_lie_axioms(g).ok


def test_gl11_grassmann_coefficients():
    g = matrix_gl(1, 1, grassmann_line(QQ))
    assert g.space.dim_pair == (4, 4)
    assert check_lie_axioms(g).ok


def test_matrix_gl_against_explicit_matrices(gl11):
    """Independent oracle: recompute every bracket by multiplying explicit
    A-valued matrices."""
    cases = [(1, 1, ground_assoc(QQ), gl11),
             (1, 1, grassmann_line(QQ), matrix_gl(1, 1, grassmann_line(QQ)))]
    for m, n, A, alg in cases:
        size = m + n
        dimA = A.dim
        for a in range(alg.dim):
            for b in range(alg.dim):
                (ij, t1) = divmod(a, dimA)
                i, j = divmod(ij, size)
                (kl, t2) = divmod(b, dimA)
                k, l = divmod(kl, size)
                want = explicit_matrix_bracket(m, n, A, i, j, t1, k, l, t2)
                got = alg.bracket_basis(a, b)
                assert got == want, (a, b, got, want)


def test_tampered_gl11_caught(gl11):
    table = {k: dict(v) for k, v in gl11.table.items()}
    (i, j) = next(iter(table))
    k = next(iter(table[(i, j)]))
    table[(i, j)][k] = -table[(i, j)][k]
    bad = LieSuperAlgebra(gl11.space, table)
    rep = check_lie_axioms(bad)
    assert not rep.ok
    assert any(v.kind == "jacobi" for v in rep.violations)
    assert rep.violations[0].witness  # a witness triple is reported


def test_sl21(sl21):
    assert sl21.dim == 8
    assert check_lie_axioms(sl21).ok
    s = series(sl21)
    assert s.is_perfect
    ab, _ = abelianization(sl21)
    assert ab.dim == 0


def test_sl30(sl30):
    assert sl30.space.dim_pair == (8, 0)
    assert series(sl30).is_perfect


def test_sl_size_guard():
    with pytest.raises(SizeError):
        matrix_sl(1, 1, ground_assoc(QQ))


def test_subalgebra_closure(heis):
    full = subalgebra_closure(heis, [{i: 1} for i in range(3)])
    assert full.dim == 3
    single = subalgebra_closure(abelian(QQ, 2, 0), [{0: 1}])
    assert single.dim == 1
    # off-diagonal units in gl(2,1) close to the 8-dimensional sl(2,1)
    gl21 = matrix_gl(2, 1, ground_assoc(QQ))
    gens = []
    for i in range(3):
        for j in range(3):
            if i != j:
                gens.append({i * 3 + j: 1})
    assert subalgebra_closure(gl21, gens).dim == 8


def test_ideal_closure(heis):
    s = series(heis)
    z = ideal_closure(heis, [dict(r) for r in s.center.rows])
    assert z.dim == 1
    x_ideal = ideal_closure(heis, [{0: 1}])
    assert x_ideal.dim == 2  # x and z
    assert ideal_closure(heis, []).dim == 0


def test_series_abelian():
    s = series(abelian(QQ, 2, 1))
    assert s.nil_class == 1
    assert s.derived_length == 1
    assert not s.is_perfect
    s0 = series(abelian(QQ, 0, 0))
    assert s0.nil_class == 0


def test_series_monotone(heis, gl11, sl21):
    for alg in (heis, gl11, sl21):
        s = series(alg)
        for a, b in zip(s.lower_central, s.lower_central[1:]):
            assert a.contains(b)
        for a, b in zip(s.derived, s.derived[1:]):
            assert a.contains(b)
        if s.nil_class is not None:
            assert s.derived_length is not None  # nilpotent implies solvable


def test_engel(heis):
    assert is_engel(abelian(QQ, 2, 0), 1)
    assert is_engel(heis, 2)
    assert not is_engel(heis, 1)
    # monotone: n-Engel implies (n+1)-Engel
    assert is_engel(heis, 3)
    assert engel_degree(heis, 3) == 2


def test_quotient_algebra(heis, gl11):
    full = heis.full_subspace()
    q, proj = quotient_algebra(heis, full)
    assert q.dim == 0
    s = series(heis)
    q2, proj2 = quotient_algebra(heis, s.center)
    assert q2.space.dim_pair == (2, 0)
    assert q2.is_abelian()
    # projection is a homomorphism of Lie superalgebras
    for i in range(heis.dim):
        for j in range(heis.dim):
            lhs = proj2.apply(heis.bracket_basis(i, j))
            rhs = q2.bracket(proj2.apply({i: 1}), proj2.apply({j: 1}))
            assert lhs == rhs
    slpart = gl11.product_subspace(gl11.full_subspace(), gl11.full_subspace())
    q3, _ = quotient_algebra(gl11, slpart)
    assert q3.dim == 1 and q3.is_abelian()


def test_quotient_rejects_non_ideal(heis):
    not_ideal = Subspace(QQ, 3, [{0: 1}])  # span{x} is not an ideal
    with pytest.raises(NotAnIdeal):
        quotient_algebra(heis, not_ideal)


def test_quotient_rejects_non_split():
    alg = abelian(QQ, 1, 1)
    mixed = Subspace(QQ, 2, [{0: 1, 1: 1}])
    with pytest.raises(NotAnIdeal):
        quotient_algebra(alg, mixed)


def test_assoc_axioms(m11):
    assert check_assoc_axioms(m11).ok
    assert m11.unit is not None
    # break associativity
    table = {k: dict(v) for k, v in m11.table.items()}
    key = next(iter(table))
    k = next(iter(table[key]))
    table[key][k] = table[key][k] + 1
    from superlie.algebras import AssocSuperAlgebra
    bad = AssocSuperAlgebra(m11.space, table, unit=m11.unit)
    assert not check_assoc_axioms(bad).ok


def test_lie_from_assoc_odd_diagonal():
    g = grassmann_line(QQ)
    lie = lie_from_assoc(g)
    assert check_lie_axioms(lie).ok
    # odd diagonal [t, t] = 2 t^2 = 0 in the rank-one Grassmann algebra
    assert lie.bracket_basis(1, 1) == {}


def test_structure_constant_storage_conventions():
    sp = superspace(QQ, [("x", 0), ("y", 0)])
    with pytest.raises(ValueError):
        LieSuperAlgebra(sp, {(1, 0): {0: 1}})  # i > j rejected
    with pytest.raises(ValueError):
        LieSuperAlgebra(sp, {(0, 0): {1: 1}})  # even diagonal rejected


def test_derived_antisymmetry():
    sp = superspace(QQ, [("x", 0), ("t", 1), ("z", 0)])
    alg = LieSuperAlgebra(sp, {(0, 1): {1: 1}, (1, 1): {2: 1}})
    # even-odd: [t,x] = -[x,t]
    assert alg.bracket_basis(1, 0) == {1: -1}
    # odd diagonal kept as given
    assert alg.bracket_basis(1, 1) == {2: 1}
    # even diagonal vanishes
    assert alg.bracket_basis(0, 0) == {}


def test_fp_heisenberg():
    F5 = Field(5)
    h5 = heisenberg(F5)
    assert check_lie_axioms(h5).ok
    s = series(h5)
    assert s.nil_class == 2 and s.center.dim == 1
