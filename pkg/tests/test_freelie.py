import pytest

from oracles import magma_quotient_dims
from superlie.algebras import check_lie_axioms, series
from superlie.fields import Field
from superlie.freelie import (
    DegreeOverflow,
    FieldUnsupported,
    Presentation,
    evaluate_relator,
    free_nilpotent,
    free_truncated,
    genset,
    miller_truncated_check,
    word_parity,
)
from superlie.homology import homology


def gs(*pairs):
    return genset(list(pairs))


def test_one_even_generator():
    assert free_truncated(gs(("x", 0)), 3).dims() == [1, 0, 0]


def test_one_odd_generator():
    F = free_truncated(gs(("t", 1)), 3)
    assert F.dims() == [1, 1, 0]
    # the square of the odd generator is a nonzero even element
    v = F.word_to_algebra_vec(["t", "t"])
    assert v
    alg = F.algebra()
    assert alg.space.parities[next(iter(v))] == 0


def test_two_even_generators_witt():
    assert free_truncated(gs(("x", 0), ("y", 0)), 3).dims() == [2, 1, 2]


def test_dims_match_magma_oracle_all_mixes():
    for g in range(1, 4):
        for bits in range(2 ** g):
            parities = [(bits >> i) & 1 for i in range(g)]
            gens = genset([(f"g{i}", p) for i, p in enumerate(parities)])
            lin = free_truncated(gens, 4).dims()
            oracle = magma_quotient_dims(parities, 4)
            assert lin == oracle, (parities, lin, oracle)


def test_free_nilpotent_class2_is_heisenberg():
    alg = free_nilpotent(gs(("x", 0), ("y", 0)), 2)
    assert alg.dim == 3
    assert check_lie_axioms(alg).ok
    s = series(alg)
    assert s.nil_class == 2 and s.center.dim == 1


def test_free_nilpotent_one_odd():
    alg = free_nilpotent(gs(("t", 1)), 2)
    assert alg.space.dim_pair == (1, 1)
    assert check_lie_axioms(alg).ok


def test_free_nilpotent_class1_abelian():
    alg = free_nilpotent(gs(("x", 0), ("t", 1)), 1)
    assert alg.is_abelian()


def test_free_nilpotent_class_is_exact():
    for gens, c in [((("x", 0), ("y", 0)), 2), ((("x", 0), ("y", 0)), 3),
                    ((("t", 1),), 2)]:
        alg = free_nilpotent(genset(list(gens)), c)
        assert series(alg).nil_class == c


def test_relator_evaluation():
    F = free_truncated(gs(("x", 0), ("y", 0)), 3)
    assert F.word_to_algebra_vec(["x", "y"])
    assert F.word_to_algebra_vec(["x", "x"]) == {}
    v = evaluate_relator(F, [["x", "y"], "x"])
    assert v.coords
    assert v.parity == 0


def test_relator_parity_respected():
    F = free_truncated(gs(("x", 0), ("t", 1)), 3)
    for word, want in [("t", 1), (["t", "t"], 0), ([["t", "t"], "t"], 1),
                       (["x", "t"], 1)]:
        v = evaluate_relator(F, word)
        if v.coords:
            assert v.parity == want, word


def test_relator_parity():
    g = gs(("x", 0), ("t", 1))
    assert word_parity("t", g) == 1
    assert word_parity(["t", "t"], g) == 0
    assert word_parity([["t", "t"], "t"], g) == 1


def test_degree_overflow():
    F = free_truncated(gs(("x", 0), ("y", 0)), 2)
    with pytest.raises(DegreeOverflow):
        F.evaluate_word([["x", "y"], "x"])


def test_field_guard():
    with pytest.raises(FieldUnsupported):
        free_truncated(gs(("x", 0)), 2, Field(5))


def test_limits():
    with pytest.raises(ValueError):
        free_truncated(genset([(f"g{i}", 0) for i in range(5)]), 2)
    with pytest.raises(ValueError):
        free_truncated(gs(("x", 0)), 6)


def test_h2_of_free_nilpotent_equals_next_degree():
    for gens, c in [((("x", 0), ("y", 0)), 2), ((("x", 0), ("t", 1)), 2),
                    ((("s", 1), ("t", 1)), 2)]:
        gg = genset(list(gens))
        alg = free_nilpotent(gg, c)
        h2 = homology(alg, None, 2)
        top = free_truncated(gg, c + 1).dims()[c]
        assert h2.dim == top, (gens, c)


def test_miller_all_small_cases():
    for gens in ([("x", 0)], [("t", 1)], [("x", 0), ("y", 0)],
                 [("x", 0), ("t", 1)], [("s", 1), ("t", 1)]):
        for c in (1, 2, 3):
            rep = miller_truncated_check(genset(gens), c)
            assert rep.ok, (gens, c, rep)


def test_presentation_validates_labels():
    with pytest.raises(KeyError):
        Presentation(gs(("x", 0)), (["x", "q"],))


def test_scalar_combination_relators():
    F = free_truncated(gs(("x", 0), ("y", 0), ("z", 0)), 2)
    rel = {"sum": [{"coeff": "1", "word": ["x", "y"]},
                   {"coeff": "-2", "word": ["x", "z"]}]}
    v = F.word_to_algebra_vec(rel)
    a = F.word_to_algebra_vec(["x", "y"])
    b = F.word_to_algebra_vec(["x", "z"])
    want = {k: a.get(k, 0) - 2 * b.get(k, 0) for k in set(a) | set(b)}
    assert v == {k: c for k, c in want.items() if c}
    assert word_parity(rel, gs(("x", 0), ("y", 0), ("z", 0))) == 0


def test_mixed_parity_sum_rejected():
    g = gs(("x", 0), ("t", 1))
    rel = {"sum": [{"coeff": "1", "word": "x"}, {"coeff": "1", "word": "t"}]}
    with pytest.raises(ValueError):
        Presentation(g, (rel,))


def test_hopf_with_combination_relator():
    from superlie.homology import homology, hopf_formula

    # impose [x,y] = [x,z] in the free class-2 algebra on three generators
    g = gs(("x", 0), ("y", 0), ("z", 0))
    rel = {"sum": [{"coeff": "1", "word": ["x", "y"]},
                   {"coeff": "-1", "word": ["x", "z"]}]}
    h = hopf_formula(Presentation(g, (rel,)), 2)
    chain = homology(h.presented, None, 2)
    assert h.dims == chain.dims
