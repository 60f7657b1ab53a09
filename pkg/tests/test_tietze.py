import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxembed.presentations import (
    CoxeterMatrix,
    HomZ2n,
    Presentation,
    build_prop2_instance,
    build_thm1_instance,
    coxeter_presentation,
    parse_presentation,
    serialize_presentation,
)
from coxembed.schreier import raw_kernel_presentation
from coxembed.tietze import (
    SimplifyConfig,
    eliminate_generator,
    normalize_relators,
    simplify,
)
from coxembed.verify import abelianization, group_order, match_presentations
from coxembed.words import commutator, power, relator_nf


def test_normalize_relators_merges_variants():
    p = Presentation(("a", "b"), ((2, 1, 2, -1), (-1, 2, 1, 2)))
    assert len(normalize_relators(p).relators) == 1

    q = Presentation(("a",), ((1, -1),))
    assert normalize_relators(q).relators == ()

    r = Presentation(
        ("a", "b"),
        (power(commutator((1,), (-2,)), 2), power(commutator((1,), (2,)), 2)),
    )
    assert len(normalize_relators(r).relators) == 1


def test_normalize_relators_sorted_deterministically():
    p = Presentation(("a", "b"), ((1, 2, 1, 2), (2, 2), (1, 1)))
    n = normalize_relators(p)
    assert [len(r) for r in n.relators] == [2, 2, 4]
    assert n.relators[0] == (1, 1)


def test_eliminate_examples():
    p = parse_presentation("< a, b | b a^-1 >")
    out = eliminate_generator(p, 1, 0)
    assert serialize_presentation(out) == "< a | >"

    q = parse_presentation("< s, t | s t, s^2 >")
    out = eliminate_generator(q, 1, 0)
    assert serialize_presentation(out) == "< s | s^2 >"

    with pytest.raises(ValueError):
        eliminate_generator(parse_presentation("< a, b | a b a b >"), 0, 0)


def test_eliminate_prop2_order_one_pairs():
    # with (s_i t_i)^1 relators the t_i are redundant; solving for them
    # substitutes s_i^-1, so recovering the Coxeter presentation verbatim
    # needs the involution sign rewrite on top of the eliminations
    inst = build_prop2_instance(CoxeterMatrix.from_pairs(2, {(0, 1): 3}), (2, 2))
    kernel = inst.expected_kernel
    target = coxeter_presentation(CoxeterMatrix.from_pairs(2, {(0, 1): 3}))
    simplified, _ = simplify(kernel, SimplifyConfig(involution_flips=True))
    assert match_presentations(simplified, target) is not None
    plain, _ = simplify(kernel)
    assert plain.rank == 2
    assert group_order(plain) == 6 == group_order(target)


def thm1_fixture():
    return build_thm1_instance(CoxeterMatrix.from_pairs(2, {(0, 1): 4}), (2, 2))


def test_simplify_raw_thm1_reaches_expected():
    inst = thm1_fixture()
    raw = raw_kernel_presentation(inst.ambient, inst.hom, inst.transversal_gens)
    simplified, trace = simplify(raw.presentation)
    assert simplified.rank == 2
    expected_nf = sorted(relator_nf(r) for r in inst.expected_kernel.relators)
    assert sorted(relator_nf(r) for r in simplified.relators) == expected_nf
    assert any(step[0] == "eliminate" for step in trace.steps)
    assert not trace.bounded


def test_simplify_free_group_raw_kernel():
    p = parse_presentation("< a | >")
    raw = raw_kernel_presentation(p, HomZ2n(1, (1,)), (0,))
    simplified, _ = simplify(raw.presentation)
    assert simplified.rank == 1
    assert simplified.relators == ()


def test_simplify_fixpoint_on_simple_input():
    p = parse_presentation("< a, b | a^2, b^2, (a b)^3 >")
    simplified, trace = simplify(p)
    assert simplified == normalize_relators(p)
    assert all(step[0] != "eliminate" for step in trace.steps)


def test_simplify_deterministic():
    inst = thm1_fixture()
    raw = raw_kernel_presentation(inst.ambient, inst.hom, inst.transversal_gens)
    a = simplify(raw.presentation)
    b = simplify(raw.presentation)
    assert a[0] == b[0]
    assert a[1].steps == b[1].steps
    assert a[1].defining == b[1].defining


def test_simplify_preserves_order_on_fixtures():
    for inst in (
        thm1_fixture(),
        build_prop2_instance(CoxeterMatrix.from_rows([[1]]), (4,)),
        build_prop2_instance(CoxeterMatrix.from_pairs(2, {(0, 1): 3}), (2, 2)),
    ):
        raw = raw_kernel_presentation(inst.ambient, inst.hom, inst.transversal_gens)
        simplified, _ = simplify(raw.presentation)
        assert group_order(raw.presentation) == group_order(simplified)
        assert abelianization(raw.presentation) == abelianization(simplified)


def test_simplify_respects_relator_length_bound():
    # eliminations may never push a relator past the bound; relators
    # already longer than the bound can only come from the input
    inst = thm1_fixture()
    raw = raw_kernel_presentation(inst.ambient, inst.hom, inst.transversal_gens)
    initial_max = max(len(r) for r in normalize_relators(raw.presentation).relators)
    cfg = SimplifyConfig(max_relator_length=4)
    simplified, _ = simplify(raw.presentation, cfg)
    assert max(len(r) for r in simplified.relators) <= max(4, initial_max)


def test_simplify_config_validation():
    with pytest.raises(ValueError):
        SimplifyConfig(max_passes=0)


names = st.lists(st.sampled_from(["a", "b", "c", "d"]), min_size=1, max_size=4, unique=True)


@st.composite
def random_presentations(draw):
    gens = tuple(draw(names))
    n = len(gens)
    letters = st.integers(-n, n).filter(lambda x: x != 0)
    rels = draw(st.lists(st.lists(letters, min_size=1, max_size=8), max_size=6))
    return Presentation(gens, tuple(tuple(r) for r in rels))


@given(random_presentations())
@settings(max_examples=50, deadline=None)
def test_simplify_preserves_abelianization(p):
    simplified, _ = simplify(p)
    assert abelianization(simplified) == abelianization(p)
