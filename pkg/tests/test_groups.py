import pytest
from conftest import random_monomial_ideal, random_product, random_quiver

from quivercover.groups import (
    AbelianInvariants,
    GroupPresentation,
    abelian_invariants,
    canonical_relators,
    cyclic_reduce,
    invert_word,
    reduce_word,
    simplify_presentation,
)
from quivercover.homotopy import homotopy_closure, pi1_presentation


def test_free_reduction():
    assert reduce_word((1, 2, -2, -1, 3)) == (3,)
    assert reduce_word((1, -1)) == ()
    assert invert_word((1, -2)) == (2, -1)
    assert cyclic_reduce((-1, 2, 1)) == (2,)
    assert cyclic_reduce((1, 2, -1, -2)) == (1, 2, -1, -2)


def test_canonical_relators():
    found = canonical_relators([(1, -1), (2, 1), (-1, -2), (3,), (3, -3, -2)])
    assert found == ((-3,), (-2,), (-1, -2))


def test_invariant_text():
    assert str(AbelianInvariants(3)) == "Z^3"
    assert str(AbelianInvariants(0, (2,))) == "Z/2"
    assert str(AbelianInvariants(0)) == "0"
    assert str(AbelianInvariants(1, (2, 3))) == "Z^1 + Z/2 + Z/3"


def test_abelian_invariants():
    assert abelian_invariants(GroupPresentation(("g",), ((1, 1),))) == AbelianInvariants(0, (2,))
    assert str(abelian_invariants(GroupPresentation(("x", "y"), ((1, 1, 2), (2, 2, 2))))) == "Z/6"
    assert abelian_invariants(GroupPresentation(("x", "y"), ((1, 2, -1),))) == AbelianInvariants(1)
    assert abelian_invariants(GroupPresentation(("d", "f", "g"), ())) == AbelianInvariants(3)
    assert abelian_invariants(GroupPresentation((), ())) == AbelianInvariants(0)


def test_presentation_text():
    p = GroupPresentation(("d", "f", "g"), ((-2,), (-3, -2)), "1")
    assert p.relator_texts() == ["f^-1", "g^-1 f^-1"]
    assert str(p) == "< d, f, g | f^-1, g^-1 f^-1 >"
    assert p.word_text(()) == "1"
    assert not p.is_free_certified


def test_simplify_to_free_group():
    p = GroupPresentation(("d", "f", "g"), ((-2,), (-3, -2)), "1")
    simple = simplify_presentation(p)
    assert simple.generators == ("d",)
    assert simple.relators == ()
    assert simple.is_free_certified
    assert simple.basepoint == "1"


def test_simplify_positive_letter():
    simple = simplify_presentation(GroupPresentation(("a", "b"), ((1, 2, 2),)))
    assert simple.generators == ("b",)
    assert simple.relators == ()


def test_simplify_keeps_commutator():
    p = GroupPresentation(("x", "y"), ((1, 2, -1, -2),))
    simple = simplify_presentation(p)
    assert simple.generators == ("x", "y")
    assert simple.relators == ((1, 2, -1, -2),)
    assert not simple.exhausted
    assert not simple.is_free_certified


def test_simplify_budget():
    p = GroupPresentation(("d", "f", "g"), ((-2,), (-3, -2)))
    partial = simplify_presentation(p, budget=0)
    assert partial.exhausted
    assert not partial.is_free_certified
    assert partial.generators == ("d", "f", "g")


# ---------- simplification keeps the abelianization ----------

def _random_presentation(rng):
    n = int(rng.integers(1, 5))
    relators = []
    for _ in range(int(rng.integers(0, 4))):
        length = int(rng.integers(1, 6))
        relators.append(tuple(int(rng.integers(1, n + 1)) * (1 if rng.random() < 0.5 else -1) for _ in range(length)))
    return GroupPresentation(tuple(f"g{k}" for k in range(n)), canonical_relators(relators))


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_simplify_keeps_abelian_invariants(seed, rng_for):
    p = _random_presentation(rng_for(13000 + seed))
    assert abelian_invariants(simplify_presentation(p)) == abelian_invariants(p)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(40))
def test_simplify_keeps_abelian_invariants_of_pi1(seed, rng_for):
    rng = rng_for(14000 + seed)
    q = random_quiver(rng)
    ideal = random_monomial_ideal(rng, q).image(random_product(rng, q).evaluate())
    p = pi1_presentation(homotopy_closure(ideal))
    assert abelian_invariants(simplify_presentation(p)) == abelian_invariants(p)
