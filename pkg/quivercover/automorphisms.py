"""Vertex-fixing automorphisms of the path algebra given by arrow images.

Composition follows the algebraic convention: ``compose(psi, chi)`` applies
``chi`` first. A transvection word ``phi_1 phi_2 ... phi_n`` applies
``phi_n`` first, and a ``DecreasingProduct`` stores its factors in
application order, i.e. with strictly increasing bypasses.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InvertibilityError, PathError, PreconditionError, TransvectionGroupError
from .order import order_of
from .quiver import Bypass, render
from .vectors import PathVector, concatenate, format_scalar, normal_form, to_scalar

logger = logging.getLogger(__name__)

PATH_IMAGE_CACHE_SIZE = 8192


@dataclass(frozen=True)
class Factor:
    """One transvection ``phi_{arrow, path, scalar}``."""

    arrow: str
    path: object
    scalar: Fraction

    @property
    def bypass(self):
        return Bypass(self.arrow, self.path)

    def __str__(self):
        return f"({self.arrow},{render(self.path)},{format_scalar(self.scalar)})"

    def to_text(self):
        return f"T {self.arrow} ({self.path}) {format_scalar(self.scalar)}"


@dataclass(frozen=True)
class ArrowSubstitution:
    quiver: object = field(compare=False, hash=False, repr=False)
    images: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "_by_label", dict(self.images))
        for a in self.quiver.arrows:
            img = self._by_label.get(a.label)
            if img is None:
                raise PathError(f"ArrowSubstitution: no image for arrow {a.label!r}")
            if img.source != a.source or img.target != a.target:
                raise PathError(f"ArrowSubstitution: image of {a.label!r} is not parallel to it")

    @classmethod
    def from_images(cls, quiver, images):
        return cls(quiver, tuple((a.label, images[a.label]) for a in quiver.arrows))

    @classmethod
    def identity(cls, quiver):
        return cls.from_images(quiver, {a.label: PathVector.of_path(quiver, quiver.arrow_path(a.label)) for a in quiver.arrows})

    def image(self, label):
        return self._by_label[label]

    @property
    def is_identity(self):
        return all(img.terms == ((self.quiver.arrow_path(label), 1),) for label, img in self.images)

    def apply_path(self, path):
        return _path_image(self.quiver, self, path)

    def __call__(self, r):
        return apply(self, r)

    def __str__(self):
        return "; ".join(f"{label} -> {img}" for label, img in self.images)


@lru_cache(maxsize=PATH_IMAGE_CACHE_SIZE)
def _path_image(quiver, psi, path):
    acc = PathVector.of_path(quiver, quiver.stationary(path.source))
    for label in path.arrows:
        acc = concatenate(acc, psi.image(label))
    return acc


def transvection(quiver, arrow, path, scalar=1):
    """``arrow -> arrow + scalar*path``, every other arrow fixed."""
    if not quiver.is_bypass(arrow, path):
        raise PathError(f"transvection: ({arrow}, {path}) is not a bypass")
    images = {a.label: PathVector.of_path(quiver, quiver.arrow_path(a.label)) for a in quiver.arrows}
    base = quiver.arrow_path(arrow)
    images[arrow] = normal_form(quiver, [(1, base), (to_scalar(scalar), path)])
    return ArrowSubstitution.from_images(quiver, images)


def dilatation(quiver, scales):
    images = {}
    for a in quiver.arrows:
        c = to_scalar(scales.get(a.label, 1))
        if c == 0:
            raise InvertibilityError(f"dilatation: zero scale on arrow {a.label!r}")
        images[a.label] = PathVector.of_path(quiver, quiver.arrow_path(a.label), c)
    return ArrowSubstitution.from_images(quiver, images)


def apply(psi, r):
    """Algebra-map extension of the arrow images to a ``PathVector``."""
    pairs = []
    for p, c in r.terms:
        pairs.extend((c * k, q) for q, k in psi.apply_path(p).terms)
    return normal_form(psi.quiver, pairs, r.source, r.target)


def compose(psi, chi):
    """``psi ∘ chi``: apply ``chi`` first."""
    if psi.quiver is not chi.quiver:
        raise PathError("compose: automorphisms over different quivers")
    return ArrowSubstitution.from_images(psi.quiver, {label: apply(psi, img) for label, img in chi.images})


def invert(psi):
    q = psi.quiver
    diagonal = {}
    for label, img in psi.images:
        c = img.coefficient(q.arrow_path(label))
        if c == 0:
            raise InvertibilityError(f"invert: arrow {label!r} has no {label!r}-term in its image")
        diagonal[label] = c

    def degree(path):
        d = Fraction(1)
        for a in path.arrows:
            d *= diagonal[a]
        return d

    chi = {a.label: PathVector.of_path(q, q.arrow_path(a.label), 1 / diagonal[a.label]) for a in q.arrows}
    longest = max((p.length for p in q.nontrivial_paths()), default=1)
    for _ in range((longest + 2) * (len(q.arrows) + 1)):
        current = ArrowSubstitution.from_images(q, chi)
        done = True
        for a in q.arrows:
            target = PathVector.of_path(q, q.arrow_path(a.label))
            err = target - apply(psi, current.image(a.label))
            if err.is_zero:
                continue
            done = False
            fix = normal_form(q, [(c / degree(p), p) for p, c in err.terms], a.source, a.target)
            chi[a.label] = chi[a.label] + fix
        if done:
            return current
    raise InvertibilityError("invert: back-substitution did not converge; substitution is not triangular")


def split_dilatation(psi):
    """Return ``(D, rest)`` with ``psi = rest ∘ D`` and ``rest`` unitriangular on arrows."""
    q = psi.quiver
    scales = {label: img.coefficient(q.arrow_path(label)) for label, img in psi.images}
    d = dilatation(q, scales)
    return d, compose(psi, invert(d))


# ---------- words and normal forms ----------

@dataclass(frozen=True)
class TransvectionWord:
    """A product ``phi_1 phi_2 ... phi_n``; ``phi_n`` is applied first."""

    quiver: object = field(compare=False, hash=False, repr=False)
    factors: tuple = ()

    def evaluate(self):
        psi = ArrowSubstitution.identity(self.quiver)
        for f in reversed(self.factors):
            psi = compose(transvection(self.quiver, f.arrow, f.path, f.scalar), psi)
        return psi

    def to_text(self):
        return " ; ".join(f.to_text() for f in self.factors)

    def __str__(self):
        if not self.factors:
            return "id"
        return " ".join(f"φ{f}" for f in self.factors)


@dataclass(frozen=True)
class DecreasingProduct:
    """``phi_n ∘ ... ∘ phi_1`` stored as ``factors = (phi_1, ..., phi_n)``."""

    quiver: object = field(compare=False, hash=False, repr=False)
    factors: tuple = ()

    def __post_init__(self):
        key = order_of(self.quiver).bypass_key
        for f in self.factors:
            if f.scalar == 0:
                raise TransvectionGroupError(f"DecreasingProduct: zero scalar on {f.bypass}")
            if not self.quiver.is_bypass(f.arrow, f.path):
                raise PathError(f"DecreasingProduct: {f.bypass} is not a bypass")
        for left, right in zip(self.factors, self.factors[1:]):
            if not key(left.bypass) < key(right.bypass):
                raise TransvectionGroupError(f"DecreasingProduct: {left.bypass} does not precede {right.bypass}")

    def evaluate(self):
        psi = ArrowSubstitution.identity(self.quiver)
        for f in self.factors:
            psi = compose(transvection(self.quiver, f.arrow, f.path, f.scalar), psi)
        return psi

    def as_word(self):
        return TransvectionWord(self.quiver, tuple(reversed(self.factors)))

    @property
    def sequence(self):
        return [(f.arrow, f.path, f.scalar) for f in self.factors]

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return str(self.as_word())


def as_substitution(psi):
    if isinstance(psi, ArrowSubstitution):
        return psi
    if isinstance(psi, (TransvectionWord, DecreasingProduct)):
        return psi.evaluate()
    raise PathError(f"expected an automorphism, got {type(psi).__name__}")


def decreasing_normal_form(psi):
    """The unique increasing factor sequence whose product is ``psi``.

    The factors are read off the arrow images ``psi(α) = α + Σ τ_i u_i`` and
    sorted by bypass; the product is re-evaluated and compared to ``psi``.
    """
    psi = as_substitution(psi)
    q = psi.quiver
    q.require_simple("decreasing_normal_form")
    order = order_of(q)

    harvested = []
    for label, img in psi.images:
        base = q.arrow_path(label)
        if img.coefficient(base) != 1:
            raise TransvectionGroupError(f"decreasing_normal_form: coefficient of {label!r} in its image is not 1")
        for p, c in img.terms:
            if p == base:
                continue
            if p.length < 2:
                raise TransvectionGroupError(f"decreasing_normal_form: image of {label!r} contains the short path {p}")
            harvested.append(Factor(label, p, c))

    harvested.sort(key=lambda f: order.bypass_key(f.bypass))
    product = DecreasingProduct(q, tuple(harvested))
    if product.evaluate() != psi:
        raise TransvectionGroupError("decreasing_normal_form: substitution is not a product of transvections")
    logger.debug("[Automorphisms] normal form with %d factors", len(harvested))
    return product


def reorder_pair(left, right, quiver):
    """Rewrite ``phi_left phi_right`` (bypass of ``left`` below ``right``'s) with ``right`` as left factor.

    Returns the factors of an equal word, left to right.
    """
    key = order_of(quiver).bypass_key
    if left.bypass == right.bypass:
        s = left.scalar + right.scalar
        return [] if s == 0 else [Factor(left.arrow, left.path, s)]
    if not key(left.bypass) < key(right.bypass):
        raise PreconditionError(f"reorder_pair: {left.bypass} is not below {right.bypass}")

    beta, v, nu = left.arrow, left.path, left.scalar
    alpha, u, tau = right.arrow, right.path, right.scalar
    if beta in u.arrows:
        w = quiver.replace_arrow(u, beta, v)
        return [right, Factor(alpha, w, tau * nu), left]
    return [right, left]
