from fractions import Fraction
from itertools import product

import pytest
from conftest import random_product, random_quiver, random_scalar, random_word, vec

from quivercover.automorphisms import (
    PATH_IMAGE_CACHE_SIZE,
    ArrowSubstitution,
    DecreasingProduct,
    Factor,
    TransvectionWord,
    _path_image,
    apply,
    compose,
    decreasing_normal_form,
    dilatation,
    invert,
    reorder_pair,
    split_dilatation,
    transvection,
)
from quivercover.errors import InvertibilityError, PathError, TransvectionGroupError
from quivercover.quiver import Quiver, render
from quivercover.vectors import PathVector, normal_form


def test_transvection_changes_presentation(intro_q):
    phi = transvection(intro_q, "a", intro_q.path("b c"), 1)
    r = vec(intro_q, "1*(a d) - 1*(b c d)")
    assert str(apply(phi, r)) == "da"


def test_transvection_zero_is_identity(six_q):
    assert transvection(six_q, "a", six_q.path("b g"), 0).is_identity


def test_transvection_requires_bypass(six_q):
    with pytest.raises(PathError):
        transvection(six_q, "a", six_q.path("b"), 1)


def test_transvection_scalars_add(six_q):
    u = six_q.path("b g")
    left = compose(transvection(six_q, "a", u, 2), transvection(six_q, "a", u, Fraction(1, 3)))
    assert left == transvection(six_q, "a", u, Fraction(7, 3))


def test_dilatations(intro_q):
    assert dilatation(intro_q, {}).is_identity
    d = dilatation(intro_q, {"a": 5})
    assert str(apply(d, vec(intro_q, "1*(a d)"))) == "5·da"
    assert compose(dilatation(intro_q, {"a": 2}), dilatation(intro_q, {"a": 3})) == dilatation(intro_q, {"a": 6})
    with pytest.raises(InvertibilityError):
        dilatation(intro_q, {"a": 0})


def test_apply(six_q):
    phi = transvection(six_q, "b", six_q.path("c e f"), 1)
    assert str(apply(phi, vec(six_q, "1*(b g)"))) == "gb + gfec"
    identity = ArrowSubstitution.identity(six_q)
    r = vec(six_q, "1*(a h) + 3*(c d g h)")
    assert apply(identity, r) == r
    psi = compose(transvection(six_q, "a", six_q.path("b g"), 1), transvection(six_q, "b", six_q.path("c e f"), 1))
    assert str(apply(psi, vec(six_q, "1*(a h)"))) == "ha + hgb"


def test_compose_intro_psi(six_q):
    psi = compose(
        transvection(six_q, "a", six_q.path("c e f g"), 1),
        transvection(six_q, "b", six_q.path("c e f"), 1),
    )
    assert str(psi.image("a")) == "a + gfec"
    assert str(psi.image("b")) == "b + fec"
    assert compose(psi, invert(psi)).is_identity


def test_double_bypass_rule(six_q):
    nu, tau = Fraction(2), Fraction(3)
    d = transvection(six_q, "d", six_q.path("e f"), nu)
    a = transvection(six_q, "a", six_q.path("c d g"), tau)
    w = transvection(six_q, "a", six_q.path("c e f g"), tau * nu)
    assert compose(d, a) == compose(compose(a, w), d)


def test_invert(intro_q, six_q):
    cb = intro_q.path("b c")
    assert invert(transvection(intro_q, "a", cb, 1)) == transvection(intro_q, "a", cb, -1)
    assert invert(ArrowSubstitution.identity(intro_q)).is_identity
    psi = compose(
        transvection(six_q, "a", six_q.path("c e f g"), 1),
        transvection(six_q, "b", six_q.path("c e f"), 1),
    )
    assert str(invert(psi).image("a")) == "a - gfec"


def test_invert_rejects_missing_diagonal(intro_q):
    images = {a.label: PathVector.of_path(intro_q, intro_q.arrow_path(a.label)) for a in intro_q.arrows}
    images["a"] = PathVector.of_path(intro_q, intro_q.path("b c"))
    with pytest.raises(InvertibilityError):
        invert(ArrowSubstitution.from_images(intro_q, images))


def test_split_dilatation(six_q):
    phi = transvection(six_q, "b", six_q.path("c e f"), 1)
    d = dilatation(six_q, {"b": 3, "h": -1})
    psi = compose(phi, d)
    found_d, rest = split_dilatation(psi)
    assert found_d == d
    assert compose(rest, found_d) == psi
    assert decreasing_normal_form(rest).sequence == [("b", six_q.path("c e f"), 1)]


def test_decreasing_normal_form(six_q):
    nu, tau = Fraction(2), Fraction(5)
    psi = compose(
        transvection(six_q, "d", six_q.path("e f"), nu),
        transvection(six_q, "a", six_q.path("c d g"), tau),
    )
    seq = [(a, render(p), s) for a, p, s in decreasing_normal_form(psi).sequence]
    assert seq == [("d", "fe", nu), ("a", "gfec", tau * nu), ("a", "gdc", tau)]
    assert len(decreasing_normal_form(ArrowSubstitution.identity(six_q))) == 0


def test_decreasing_normal_form_of_intro_word(six):
    product = decreasing_normal_form(six.words["psi"])
    assert [str(f) for f in product.factors] == ["(b,fec,1)", "(a,gfec,1)"]
    assert str(product) == "φ(a,gfec,1) φ(b,fec,1)"


def test_normal_form_rejects_dilatation(six_q):
    with pytest.raises(TransvectionGroupError):
        decreasing_normal_form(dilatation(six_q, {"a": 2}))


def test_decreasing_product_validation(six_q):
    fe, gdc = six_q.path("e f"), six_q.path("c d g")
    with pytest.raises(TransvectionGroupError):
        DecreasingProduct(six_q, (Factor("a", gdc, 1), Factor("d", fe, 1)))
    with pytest.raises(TransvectionGroupError):
        DecreasingProduct(six_q, (Factor("d", fe, 0),))


def test_reorder_pair(six_q):
    left = Factor("d", six_q.path("e f"), Fraction(2))
    right = Factor("a", six_q.path("c d g"), Fraction(3))
    rewritten = reorder_pair(left, right, six_q)
    assert rewritten[0] == right
    assert rewritten[1] == Factor("a", six_q.path("c e f g"), Fraction(6))
    assert TransvectionWord(six_q, (left, right)).evaluate() == TransvectionWord(six_q, tuple(rewritten)).evaluate()

    same = reorder_pair(left, Factor("d", six_q.path("e f"), Fraction(-2)), six_q)
    assert same == []

    commuting = reorder_pair(Factor("d", six_q.path("e f"), 1), Factor("b", six_q.path("c e f"), 1), six_q)
    assert len(commuting) == 2


def test_path_images_are_cached(six_q):
    psi = transvection(six_q, "a", six_q.path("b g"), 2)
    u = six_q.path("a h")
    assert psi.apply_path(u) is psi.apply_path(u)
    assert _path_image.cache_info().maxsize == PATH_IMAGE_CACHE_SIZE


def test_path_image_cache_tells_quivers_apart():
    arrows = [("x", "1", "2"), ("y", "2", "3"), ("z", "1", "3")]
    q = Quiver(["1", "2", "3"], arrows)
    twin = Quiver(["1", "2", "3"], arrows, ["z", "y", "x"])
    psi = transvection(q, "z", q.path("x y"), 1)
    twin_psi = transvection(twin, "z", twin.path("x y"), 1)
    assert psi.apply_path(q.path("z")).quiver is q
    assert twin_psi.apply_path(twin.path("z")).quiver is twin


# ---------- evaluation and normal form on random instances ----------

def _expand(psi, path):
    """Multiply the arrow images out term by term."""
    q = psi.quiver
    choices = [psi.image(label).terms for label in path.arrows]
    pairs = []
    for pick in product(*choices):
        coeff = Fraction(1)
        arrows = ()
        for p, c in pick:
            coeff *= c
            arrows += p.arrows
        pairs.append((coeff, type(path)(path.source, path.target, arrows)))
    return normal_form(q, pairs, path.source, path.target)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_apply_matches_expansion(seed, rng_for):
    rng = rng_for(seed)
    q = random_quiver(rng, max_vertices=6, max_arrows=9)
    psi = random_word(rng, q, 4).evaluate()
    paths = q.nontrivial_paths()
    for k in rng.choice(len(paths), size=min(5, len(paths)), replace=False):
        u = paths[int(k)]
        assert apply(psi, PathVector.of_path(q, u)) == _expand(psi, u)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_normal_form_round_trip(seed, rng_for):
    rng = rng_for(1000 + seed)
    q = random_quiver(rng)
    word = random_word(rng, q, 6)
    psi = word.evaluate()
    product_form = decreasing_normal_form(psi)
    assert product_form.evaluate() == psi
    assert decreasing_normal_form(product_form.evaluate()).factors == product_form.factors

    again = random_product(rng, q)
    assert decreasing_normal_form(again.evaluate()).factors == again.factors


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_inverse_and_derived_support(seed, rng_for):
    rng = rng_for(5000 + seed)
    q = random_quiver(rng)
    psi = random_word(rng, q, 5).evaluate()
    assert compose(invert(psi), psi).is_identity
    for u in q.nontrivial_paths():
        for p in apply(psi, PathVector.of_path(q, u)).support:
            assert p == u or q.derivation_order(u, p) is not None
    d = dilatation(q, {a.label: random_scalar(rng) for a in q.arrows})
    assert compose(d, invert(d)).is_identity


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_normal_form_of_mixed_products(seed, rng_for):
    rng = rng_for(9000 + seed)
    q = random_quiver(rng)
    psi = random_word(rng, q, 4).evaluate()
    for _ in range(int(rng.integers(1, 4))):
        scales = {a.label: random_scalar(rng) for a in q.arrows if rng.random() < 0.5}
        psi = compose(dilatation(q, scales), psi)
        psi = compose(random_word(rng, q, 2).evaluate(), psi)
    d, rest = split_dilatation(psi)
    assert compose(rest, d) == psi
    form = decreasing_normal_form(rest)
    assert form.evaluate() == rest

    # same automorphism, longer word
    factors = form.as_word().factors
    bypasses = q.bypasses()
    if bypasses:
        b = bypasses[int(rng.integers(0, len(bypasses)))]
        s = random_scalar(rng)
        k = int(rng.integers(0, len(factors) + 1))
        factors = factors[:k] + (Factor(b.arrow, b.path, s), Factor(b.arrow, b.path, -s)) + factors[k:]
    longer = TransvectionWord(q, factors)
    assert decreasing_normal_form(longer.evaluate()).factors == form.factors
