"""Admissible ideals of a triangular path algebra.

An ideal is stored hom-space by hom-space: ``_yI_x`` is a subspace of the span
of the nontrivial paths from ``x`` to ``y`` and is kept as its reduced echelon
basis for the path order (leading path = largest path of the support). That
basis is the Gröbner basis of the subspace.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import sympy

from .automorphisms import (
    ArrowSubstitution,
    apply,
    as_substitution,
    compose,
    decreasing_normal_form,
    split_dilatation,
    transvection,
)
from .errors import (
    AdmissibilityError,
    CapacityError,
    ConsistencyError,
    MembershipError,
    NotConjugateError,
    PreconditionError,
)
from .linalg import echelon, left_kernel, reduce
from .order import order_of
from .quiver import Bypass, render
from .settings import Settings
from .vectors import PathVector, concatenate, normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Membership:
    member: bool
    coordinates: tuple = ()
    remainder: object = None


@dataclass(frozen=True)
class MinimalRelation:
    relation: PathVector

    @property
    def monomial(self):
        return self.relation.is_monomial

    def __str__(self):
        return str(self.relation)


@dataclass(frozen=True)
class SeedSearch:
    seed: object
    reason: str
    unknowns: int = 0

    @property
    def found(self):
        return self.seed is not None


class AdmissibleIdeal:
    """Two-sided ideal given by per-hom-space Gröbner bases.

    Equality and hashing use the Gröbner bases only; ``generators`` records
    where the ideal came from and is what ``str`` prints.
    """

    def __init__(self, quiver, generators, spaces):
        self.quiver = quiver
        self.generators = tuple(generators)
        self._spaces = {k: tuple(v) for k, v in spaces.items() if v}
        self.key = tuple(
            (space, tuple(row.terms for row in self._spaces[space]))
            for space in quiver.hom_spaces()
            if space in self._spaces
        )

    def __eq__(self, other):
        return isinstance(other, AdmissibleIdeal) and self.quiver is other.quiver and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    # ---------- reading ----------

    def basis(self, x, y):
        """Gröbner basis of ``_yI_x``, leading paths increasing."""
        return self._spaces.get((x, y), ())

    def groebner_basis(self):
        return [row for space in self.quiver.hom_spaces() for row in self._spaces.get(space, ())]

    def dimension(self, x, y):
        return len(self._spaces.get((x, y), ()))

    def dimension_profile(self):
        return {space: len(rows) for space, rows in self._spaces.items()}

    @property
    def is_zero(self):
        return not self._spaces

    def paths(self):
        """The paths lying in the ideal."""
        return frozenset(row.leading_path for row in self.groebner_basis() if row.is_monomial)

    def contains(self, r):
        return membership(self, r).member

    def __contains__(self, r):
        return self.contains(r)

    def image(self, psi):
        """``psi(I)``, row-reducing the images of the Gröbner elements."""
        psi = as_substitution(psi)
        return _build(
            self.quiver,
            [apply(psi, g) for g in self.generators],
            [apply(psi, row) for row in self.groebner_basis()],
        )

    def generator_text(self):
        gens = [g for g in self.generators if not g.is_zero] or self.groebner_basis()
        return "<" + ", ".join(str(g) for g in gens) + ">"

    def __str__(self):
        return self.generator_text()

    def __repr__(self):
        return f"AdmissibleIdeal({self.generator_text()})"


def _columns(quiver, x, y):
    key = order_of(quiver).basis_key
    return sorted((p for p in quiver.hom(x, y) if p.length), key=key, reverse=True)


def _build(quiver, generators, vectors):
    by_space = defaultdict(list)
    for v in vectors:
        if not v.is_zero:
            by_space[(v.source, v.target)].append(v.as_dict())

    spaces = {}
    for (x, y), vecs in by_space.items():
        rows = echelon(vecs, _columns(quiver, x, y))
        pvs = [normal_form(quiver, [(c, p) for p, c in row.items()], x, y) for row in rows]
        spaces[(x, y)] = tuple(reversed(pvs))
    return AdmissibleIdeal(quiver, generators, spaces)


def ideal_from_generators(quiver, gens):
    quiver.require_acyclic("ideal_from_generators")
    gens = list(gens)
    for g in gens:
        if any(p.length < 2 for p in g.support):
            raise AdmissibilityError(f"ideal_from_generators: generator {g} has a term of length below 2")

    vectors = []
    for g in gens:
        if g.is_zero:
            continue
        before = [PathVector.of_path(quiver, p) for p in quiver.paths_into(g.source)]
        after = [PathVector.of_path(quiver, p) for p in quiver.paths_from(g.target)]
        for left in before:
            lg = concatenate(left, g)
            vectors.extend(concatenate(lg, right) for right in after)
    ideal = _build(quiver, gens, vectors)
    logger.debug("[Ideals] %s: dimensions %s", ideal, ideal.dimension_profile())
    return ideal


def zero_ideal(quiver):
    return ideal_from_generators(quiver, [])


def membership(ideal, r):
    columns = _columns(ideal.quiver, r.source, r.target)
    basis = {row.leading_path: row.as_dict() for row in ideal.basis(r.source, r.target)}
    rest, coords = reduce(r.as_dict(), basis, columns)
    remainder = normal_form(ideal.quiver, [(c, p) for p, c in rest.items()], r.source, r.target)
    if rest:
        return Membership(False, (), remainder)
    return Membership(True, tuple((p, coords[p]) for p in columns if p in coords), remainder)


def is_monomial(ideal):
    return all(row.is_monomial for row in ideal.groebner_basis())


def _require_monomial(ideal, what):
    if not is_monomial(ideal):
        raise PreconditionError(f"{what}: {ideal} is not monomial")


# ---------- minimal relations ----------

def minimal_relations(ideal, r, settings=None):
    """Split ``r`` into minimal relations with pairwise disjoint supports."""
    settings = settings or Settings()
    if not ideal.contains(r):
        raise MembershipError(f"minimal_relations: {r} is not in {ideal}")
    if len(r.terms) > settings.subexpression_cap:
        raise CapacityError(f"minimal_relations: support of size {len(r.terms)} exceeds the cap")

    found = []
    rest = r
    while not rest.is_zero:
        terms = rest.terms
        piece = None
        for size in range(1, len(terms) + 1):
            for chosen in combinations(terms, size):
                candidate = PathVector(r.quiver, r.source, r.target, chosen)
                if ideal.contains(candidate):
                    piece = candidate
                    break
            if piece is not None:
                break
        found.append(MinimalRelation(piece))
        rest = PathVector(r.quiver, r.source, r.target, tuple(t for t in terms if t not in piece.terms))
    return found


def minimal_support_relations(ideal, x, y, settings=None):
    """Relations of minimal support in ``_yI_x``, leading coefficient 1.

    Each is a minimal relation, and together their supports connect the
    same paths as the supports of all minimal relations.
    """
    settings = settings or Settings()
    rows = [row.as_dict() for row in ideal.basis(x, y)]
    if not rows:
        return []
    candidates = [p for p in _columns(ideal.quiver, x, y) if any(p in row for row in rows)]
    if len(candidates) > settings.subexpression_cap:
        raise CapacityError(f"minimal_support_relations: {len(candidates)} paths in hom({x},{y}) exceed the cap")

    circuits = []
    for size in range(1, len(candidates) + 1):
        for chosen in combinations(candidates, size):
            support = set(chosen)
            if any(c <= support for c, _ in circuits):
                continue
            outside = [p for p in candidates if p not in support]
            kernel = left_kernel(rows, outside)
            if not kernel:
                continue
            combo = defaultdict(Fraction)
            for lam, row in zip(kernel[0], rows):
                for p, c in row.items():
                    combo[p] += lam * c
            vec = normal_form(ideal.quiver, [(c, p) for p, c in combo.items()], x, y)
            vec = vec.scale(1 / vec.leading_coefficient)
            circuits.append((frozenset(vec.support), vec))
    return [MinimalRelation(vec) for _, vec in circuits]


def seed_supports(ideal):
    """Supports of the Gröbner elements with at least two terms."""
    return [row.support for row in ideal.groebner_basis() if len(row.terms) > 1]


# ---------- monomial ideals and conjugates ----------

def groebner_structure(ideal0, ideal):
    """``u -> r_u`` with ``r_u`` the Gröbner element of ``ideal`` led by ``u``."""
    _require_monomial(ideal0, "groebner_structure")
    q = ideal.quiver
    table = {}
    for space in q.hom_spaces():
        monomials = [row.leading_path for row in ideal0.basis(*space)]
        rows = {row.leading_path: row for row in ideal.basis(*space)}
        if set(monomials) != set(rows):
            extra = sorted(map(str, set(rows) - set(monomials))) or sorted(map(str, set(monomials) - set(rows)))
            raise NotConjugateError(f"groebner_structure: leading paths differ from I0 in hom{space}: {extra}")
        for u in monomials:
            r = rows[u]
            for p in r.support[1:]:
                if q.derivation_order(u, p) is None:
                    raise NotConjugateError(f"groebner_structure: {render(p)} in r_{render(u)} is not derived of {render(u)}")
            table[u] = r
    return table


def preserves_monomial_ideal(ideal0, bypass):
    _require_monomial(ideal0, "preserves_monomial_ideal")
    q = ideal0.quiver
    monomials = ideal0.paths()
    for v in monomials:
        if bypass.arrow in v.arrows and q.replace_arrow(v, bypass.arrow, bypass.path) not in monomials:
            return False
    return True


def stabilizing_bypasses(ideal0):
    order = order_of(ideal0.quiver)
    return [b for b in order.sorted_bypasses() if preserves_monomial_ideal(ideal0, b)]


def _unit_part(psi):
    q = psi.quiver
    if all(img.coefficient(q.arrow_path(label)) == 1 for label, img in psi.images):
        return psi
    _, rest = split_dilatation(psi)
    return rest


def compute_psi_I(ideal0, ideal, seed):
    """Canonical product of transvections carrying ``ideal0`` to ``ideal``.

    ``seed`` may be any automorphism with ``seed(ideal0) == ideal``; a diagonal
    part is discarded first since it fixes the monomial ``ideal0``.
    """
    q = ideal0.quiver
    q.require_simple("compute_psi_I")
    _require_monomial(ideal0, "compute_psi_I")
    psi = _unit_part(as_substitution(seed))
    if ideal0.image(psi) != ideal:
        raise PreconditionError(f"compute_psi_I: the seed does not map {ideal0} to {ideal}")

    order = order_of(q)
    preserving = {}

    def preserves(b):
        if b not in preserving:
            preserving[b] = preserves_monomial_ideal(ideal0, b)
        return preserving[b]

    budget = len(q.bypasses()) + 1
    for _ in range(budget):
        candidates = [
            Bypass(label, p)
            for label, img in psi.images
            for p in img.support
            if p.arrows != (label,) and preserves(Bypass(label, p))
        ]
        if not candidates:
            break
        top = max(candidates, key=order.bypass_key)
        tau = psi.image(top.arrow).coefficient(top.path)
        logger.debug("[Ideals] psi_I reduction at %s, tau=%s", top, tau)
        psi = compose(psi, transvection(q, top.arrow, top.path, -tau))
    else:
        raise ConsistencyError("compute_psi_I: reduction did not terminate")

    product = decreasing_normal_form(psi)
    if ideal0.image(product.evaluate()) != ideal:
        raise ConsistencyError("compute_psi_I: reduced automorphism no longer maps I0 to I")
    return product


def satisfies_psi_conditions(ideal0, product):
    """Check that no factor of ``product`` preserves ``ideal0``."""
    return all(not preserves_monomial_ideal(ideal0, f.bypass) for f in product.factors)


def find_seed(ideal0, ideal):
    """Search for ``psi`` in the transvection group with ``psi(ideal0) == ideal``.

    Unknown coefficients are put on the bypasses that move ``ideal0`` (the
    only ones that can occur in the canonical automorphism); membership of
    ``psi(u)`` in ``ideal`` for every path ``u`` of ``ideal0`` gives a
    polynomial system solved exactly. A found seed is verified before it is
    returned; otherwise the reason is reported.
    """
    q = ideal0.quiver
    q.require_simple("find_seed")
    _require_monomial(ideal0, "find_seed")

    if ideal0 == ideal:
        return SeedSearch(ArrowSubstitution.identity(q), "identical ideals")
    profile0, profile = ideal0.dimension_profile(), ideal.dimension_profile()
    if profile0 != profile:
        diff = sorted(set(profile0.items()) ^ set(profile.items()))
        return SeedSearch(None, f"dimension mismatch at hom{diff[0][0]}")

    unknown = [b for b in order_of(q).sorted_bypasses() if not preserves_monomial_ideal(ideal0, b)]
    if not unknown:
        return SeedSearch(None, "no bypass moves I0")
    symbols = sympy.symbols(f"t0:{len(unknown)}")
    images = {a.label: {q.arrow_path(a.label): sympy.Integer(1)} for a in q.arrows}
    for b, t in zip(unknown, symbols):
        images[b.arrow][b.path] = t

    equations = []
    for u in sorted(ideal0.paths(), key=order_of(q).basis_key):
        expanded = {q.stationary(u.source): sympy.Integer(1)}
        for label in u.arrows:
            step = defaultdict(lambda: sympy.Integer(0))
            for p, c in expanded.items():
                for p2, k in images[label].items():
                    step[p.then(p2)] += c * k
            expanded = dict(step)
        equations.extend(_symbolic_remainder(ideal, u.source, u.target, expanded))

    solutions = sympy.solve(equations, symbols, dict=True) if equations else [{}]
    for sol in solutions:
        values = []
        for t in symbols:
            v = sympy.sympify(sol.get(t, 0)).subs({s: 0 for s in symbols})
            if not v.is_rational:
                break
            values.append(Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])))
        else:
            seed = _seed_from(q, unknown, values)
            if ideal0.image(seed) == ideal:
                logger.debug("[Ideals] seed found with %d unknowns", len(symbols))
                return SeedSearch(seed, "found", len(symbols))
    return SeedSearch(None, "search exhausted: no rational transvection seed found", len(symbols))


def _symbolic_remainder(ideal, x, y, coeffs):
    columns = _columns(ideal.quiver, x, y)
    basis = {row.leading_path: row for row in ideal.basis(x, y)}
    rest = {p: sympy.expand(c) for p, c in coeffs.items()}
    for col in columns:
        row = basis.get(col)
        f = rest.get(col, 0)
        if row is None or f == 0:
            continue
        for p, c in row.terms:
            rest[p] = sympy.expand(rest.get(p, 0) - f * sympy.Rational(c.numerator, c.denominator))
    return [c for c in rest.values() if c != 0]


def _seed_from(q, bypasses, values):
    pairs = defaultdict(list)
    for b, v in zip(bypasses, values):
        if v != 0:
            pairs[b.arrow].append((v, b.path))
    images = {
        a.label: normal_form(q, [(1, q.arrow_path(a.label))] + pairs[a.label]) for a in q.arrows
    }
    return ArrowSubstitution.from_images(q, images)
