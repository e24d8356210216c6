from fractions import Fraction

import pytest
from conftest import random_monomial_ideal, random_product, random_quiver, random_scalar, vec

from quivercover.automorphisms import DecreasingProduct, Factor, compose, dilatation, transvection
from quivercover.errors import (
    AdmissibilityError,
    MembershipError,
    NotConjugateError,
    PreconditionError,
)
from quivercover.ideals import (
    compute_psi_I,
    find_seed,
    groebner_structure,
    ideal_from_generators,
    is_monomial,
    membership,
    minimal_relations,
    minimal_support_relations,
    preserves_monomial_ideal,
    satisfies_psi_conditions,
    seed_supports,
    stabilizing_bypasses,
    zero_ideal,
)
from quivercover.order import order_of
from quivercover.quiver import Bypass, Quiver, render


def _bypass(q, arrow, labels):
    return Bypass(arrow, q.path(labels))


def test_groebner_basis_by_hom_space(six):
    ideal = six.ideals["I"]
    assert [str(r) for r in ideal.basis("1", "6")] == ["hgdc", "hgb + hgfec", "ha + hgfec"]
    assert [str(r) for r in ideal.basis("1", "5")] == ["gdc", "gb + gfec"]
    assert [str(r) for r in ideal.basis("1", "4")] == ["dc"]
    assert ideal.dimension_profile() == six.ideals["I0"].dimension_profile()
    assert ideal.dimension("2", "3") == 0


def test_monomial_ideal_paths(six):
    i0 = six.ideals["I0"]
    assert is_monomial(i0)
    assert sorted(render(p) for p in i0.paths()) == ["dc", "gb", "gdc", "ha", "hgb", "hgdc"]
    assert not is_monomial(six.ideals["I"])
    assert sorted(render(p) for p in six.ideals["I"].paths()) == ["dc", "gdc", "hgdc"]


def test_equality_ignores_generators(six, six_q):
    redundant = ideal_from_generators(six_q, [vec(six_q, t) for t in ("1*(a h)", "1*(b g)", "1*(c d)", "1*(b g h)")])
    assert redundant == six.ideals["I0"]
    assert hash(redundant) == hash(six.ideals["I0"])
    assert redundant != six.ideals["I"]
    assert zero_ideal(six_q).is_zero


def test_generators_must_avoid_short_terms(six_q):
    with pytest.raises(AdmissibilityError):
        ideal_from_generators(six_q, [vec(six_q, "1*(a) - 1*(b g)")])


def test_membership(six, six_q):
    ideal = six.ideals["I"]
    outside = membership(ideal, vec(six_q, "1*(a h) + 1*(b g h)"))
    assert not outside.member
    assert str(outside.remainder) == "-2·hgfec"

    inside = membership(ideal, vec(six_q, "1*(a h) - 1*(b g h)"))
    assert inside.member
    assert inside.remainder.is_zero
    assert [(render(p), c) for p, c in inside.coordinates] == [("ha", 1), ("hgb", -1)]

    assert vec(six_q, "3*(c d g h)") in ideal
    assert vec(six_q, "1*(c e f g h)") not in ideal


def test_image_of_monomial_ideal(six):
    assert six.ideals["I0"].image(six.words["psi"]) == six.ideals["I"]


def test_minimal_relations(six, six_q):
    ideal = six.ideals["I"]
    r = vec(six_q, "1*(a h) + 1*(c d g h) + 1*(c e f g h)")
    assert [str(m) for m in minimal_relations(ideal, r)] == ["hgdc", "ha + hgfec"]
    with pytest.raises(MembershipError):
        minimal_relations(ideal, vec(six_q, "1*(a h) + 1*(b g h)"))


def test_minimal_support_relations(six):
    found = minimal_support_relations(six.ideals["I"], "1", "6")
    assert [str(m) for m in found] == ["hgdc", "ha - hgb", "ha + hgfec", "hgb + hgfec"]
    assert [m.monomial for m in found] == [True, False, False, False]
    assert minimal_support_relations(six.ideals["I"], "2", "3") == []


def test_seed_supports(six):
    found = {frozenset(render(p) for p in s) for s in seed_supports(six.ideals["I"])}
    assert found == {
        frozenset({"gb", "gfec"}),
        frozenset({"ha", "hgfec"}),
        frozenset({"hgb", "hgfec"}),
    }
    assert seed_supports(six.ideals["I0"]) == []


def test_groebner_structure(six, six_q):
    table = groebner_structure(six.ideals["I0"], six.ideals["I"])
    assert {render(u): str(r) for u, r in table.items()} == {
        "dc": "dc",
        "gdc": "gdc",
        "hgdc": "hgdc",
        "gb": "gb + gfec",
        "ha": "ha + hgfec",
        "hgb": "hgb + hgfec",
    }
    with pytest.raises(PreconditionError):
        groebner_structure(six.ideals["I"], six.ideals["I0"])
    smaller = ideal_from_generators(six_q, [vec(six_q, "1*(a h)")])
    with pytest.raises(NotConjugateError):
        groebner_structure(six.ideals["I0"], smaller)


def test_groebner_structure_needs_derived_terms():
    # yx and wz are parallel but neither is derived of the other
    q = Quiver(["1", "2", "3", "4"], [("x", "1", "2"), ("y", "2", "4"), ("z", "1", "3"), ("w", "3", "4")])
    i0 = ideal_from_generators(q, [vec(q, "1*(x y)")])
    mixed = ideal_from_generators(q, [vec(q, "1*(x y) - 1*(z w)")])
    with pytest.raises(NotConjugateError):
        groebner_structure(i0, mixed)


def test_preserving_bypasses(six, six_q):
    i0 = six.ideals["I0"]
    keep = [("a", "b g"), ("a", "c d g"), ("b", "c d")]
    move = [("d", "e f"), ("b", "c e f"), ("a", "c e f g")]
    assert all(preserves_monomial_ideal(i0, _bypass(six_q, a, p)) for a, p in keep)
    assert not any(preserves_monomial_ideal(i0, _bypass(six_q, a, p)) for a, p in move)
    assert [str(b) for b in stabilizing_bypasses(i0)] == ["(b,dc)", "(a,gdc)", "(a,gb)"]


def test_compute_psi_I(six, six_q):
    i0, ideal, psi = six.ideals["I0"], six.ideals["I"], six.words["psi"]
    seeds = [
        psi,
        compose(psi.evaluate(), transvection(six_q, "b", six_q.path("c d"), 1)),
        compose(psi.evaluate(), transvection(six_q, "a", six_q.path("b g"), 2)),
        compose(psi.evaluate(), dilatation(six_q, {"a": 3, "h": -1})),
    ]
    for seed in seeds:
        product = compute_psi_I(i0, ideal, seed)
        assert [str(f) for f in product.factors] == ["(b,fec,1)", "(a,gfec,1)"]
        assert satisfies_psi_conditions(i0, product)
        assert i0.image(product) == ideal


def test_compute_psi_I_other_conjugate(six, six_q):
    i0 = six.ideals["I0"]
    seed = compose(
        transvection(six_q, "a", six_q.path("b g"), 1),
        transvection(six_q, "b", six_q.path("c e f"), 1),
    )
    product = compute_psi_I(i0, i0.image(seed), seed)
    assert [str(f) for f in product.factors] == ["(b,fec,1)", "(a,gfec,-1)"]


def test_compute_psi_I_refuses_wrong_seed(six, six_q):
    identity = dilatation(six_q, {})
    with pytest.raises(PreconditionError):
        compute_psi_I(six.ideals["I0"], six.ideals["I"], identity)
    with pytest.raises(PreconditionError):
        compute_psi_I(six.ideals["I"], six.ideals["I"], identity)


def test_psi_conditions(six, six_q):
    i0 = six.ideals["I0"]
    bad = DecreasingProduct(six_q, (Factor("b", six_q.path("c d"), Fraction(1)),))
    assert not satisfies_psi_conditions(i0, bad)
    assert satisfies_psi_conditions(i0, DecreasingProduct(six_q, ()))


def test_find_seed(six, six_q):
    i0, ideal = six.ideals["I0"], six.ideals["I"]
    search = find_seed(i0, ideal)
    assert search.found
    assert search.unknowns == 3
    assert i0.image(search.seed) == ideal
    assert [str(f) for f in compute_psi_I(i0, ideal, search.seed).factors] == ["(b,fec,1)", "(a,gfec,1)"]

    same = find_seed(i0, i0)
    assert same.found and same.reason == "identical ideals"

    smaller = ideal_from_generators(six_q, [vec(six_q, "1*(a h)")])
    missing = find_seed(i0, smaller)
    assert not missing.found
    assert missing.reason.startswith("dimension mismatch")


def test_find_seed_without_solution(intro, intro_q):
    # same dimensions, different leading path
    other = ideal_from_generators(intro_q, [vec(intro_q, "1*(b c d)")])
    search = find_seed(intro.ideals["I0"], other)
    assert not search.found


def test_find_seed_when_no_bypass_moves_i0():
    q = Quiver(["1", "2", "3", "4"], [("x", "1", "2"), ("y", "2", "3"), ("z", "1", "3"), ("w", "3", "4")])
    i0 = ideal_from_generators(q, [vec(q, "1*(x y w)")])
    other = ideal_from_generators(q, [vec(q, "1*(z w)")])
    assert i0.dimension_profile() == other.dimension_profile()
    search = find_seed(i0, other)
    assert not search.found
    assert search.reason == "no bypass moves I0"
    assert search.unknowns == 0


# ---------- conjugates of random monomial ideals ----------

@pytest.mark.slow
@pytest.mark.parametrize("seed", range(60))
def test_conjugates_of_random_monomial_ideals(seed, rng_for):
    rng = rng_for(7000 + seed)
    q = random_quiver(rng)
    i0 = random_monomial_ideal(rng, q)
    psi = random_product(rng, q).evaluate()
    ideal = i0.image(psi)

    table = groebner_structure(i0, ideal)
    assert set(table) == set(i0.paths())
    for u, r in table.items():
        assert r.leading_path == u
        assert r.coefficient(u) == 1

    product = compute_psi_I(i0, ideal, psi)
    assert i0.image(product) == ideal
    assert satisfies_psi_conditions(i0, product)

    for b in stabilizing_bypasses(i0):
        other = compose(psi, transvection(q, b.arrow, b.path, 1))
        assert compute_psi_I(i0, ideal, other).factors == product.factors

    order = order_of(q)
    keys = [order.bypass_key(f.bypass) for f in product.factors]
    assert keys == sorted(keys)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(60))
def test_preserving_bypasses_fix_the_ideal(seed, rng_for):
    rng = rng_for(15000 + seed)
    q = random_quiver(rng)
    i0 = random_monomial_ideal(rng, q)
    for b in q.bypasses():
        moved = i0.image(transvection(q, b.arrow, b.path, random_scalar(rng)))
        assert preserves_monomial_ideal(i0, b) == (moved == i0)
    assert set(stabilizing_bypasses(i0)) == {b for b in q.bypasses() if preserves_monomial_ideal(i0, b)}

    scales = {a.label: random_scalar(rng) for a in q.arrows if rng.random() < 0.7}
    assert i0.image(dilatation(q, scales)) == i0
