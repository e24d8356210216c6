"""Homotopy relations of presentations and fundamental groups.

A homotopy relation is represented by the classes of parallel paths it
identifies. The classes are the smallest ones containing the seed pairs and
closed under substitution of an identified subpath and under cancellation of
a common first or last factor.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from networkx.utils import UnionFind

from .automorphisms import transvection
from .errors import ConsistencyError, NotComparableError, PathError
from .groups import GroupPresentation, canonical_relators, invert_word
from .ideals import seed_supports
from .order import order_of
from .quiver import Path, render
from .vectors import to_scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomotopyRelation:
    quiver: object = field(compare=False, hash=False, repr=False)
    classes: frozenset = frozenset()
    seed_pairs: tuple = field(default=(), compare=False)

    def identifies(self, u, v):
        if u == v:
            return True
        return any(u in c and v in c for c in self.classes)

    def class_of(self, u):
        for c in self.classes:
            if u in c:
                return c
        return frozenset((u,))

    def pairs(self):
        key = order_of(self.quiver).basis_key
        out = []
        for c in self.classes:
            ordered = sorted(c, key=key, reverse=True)
            out.extend(combinations(ordered, 2))
        return sorted(out, key=lambda pq: (key(pq[0]), key(pq[1])), reverse=True)

    def sorted_classes(self):
        key = order_of(self.quiver).basis_key
        ordered = [sorted(c, key=key, reverse=True) for c in self.classes]
        return sorted(ordered, key=lambda c: (c[0].source, c[0].target, key(c[0])))

    def is_refined_by(self, other):
        """True when every identification made here is also made by ``other``."""
        return all(any(c <= d for d in other.classes) for c in self.classes)

    def __str__(self):
        if not self.classes:
            return "{}"
        return "{" + "; ".join(" ~ ".join(render(p) for p in c) for c in self.sorted_classes()) + "}"


def _subpath(q, path, i, j):
    arrows = path.arrows[i:j]
    return Path(q.arrow(arrows[0]).source, q.arrow(arrows[-1]).target, arrows)


def _stripped(q, p, r):
    """Cancel the longest common first and last factors of two parallel paths."""
    a, b = p.arrows, r.arrows
    k = 0
    while k < min(len(a), len(b)) and a[k] == b[k]:
        k += 1
    m = 0
    while m < min(len(a), len(b)) - k and a[-1 - m] == b[-1 - m]:
        m += 1
    if k == 0 and m == 0:
        return None
    a2, b2 = a[k:len(a) - m], b[k:len(b) - m]
    if not a2 or not b2:
        return None
    source = q.arrow(a[k - 1]).target if k else p.source
    target = q.arrow(a[len(a) - m]).source if m else p.target
    return Path(source, target, a2), Path(source, target, b2)


def close_pairs(quiver, pairs):
    """Classes generated by ``pairs`` under substitution and cancellation."""
    quiver.require_acyclic("homotopy_closure")
    uf = UnionFind()
    for u, v in pairs:
        if not u.is_parallel(v):
            raise PathError(f"homotopy_closure: {u} and {v} are not parallel")
        uf.union(u, v)

    paths = quiver.nontrivial_paths()
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        groups = [g for g in uf.to_sets() if len(g) > 1]
        member = {p: g for g in groups for p in g}
        if not member:
            break

        for big in paths:
            n = big.length
            for i in range(n):
                for j in range(i + 1, n + 1):
                    if i == 0 and j == n:
                        continue
                    sub = _subpath(quiver, big, i, j)
                    for other in member.get(sub, ()):
                        if other == sub:
                            continue
                        swapped = Path(big.source, big.target, big.arrows[:i] + other.arrows + big.arrows[j:])
                        if uf[big] != uf[swapped]:
                            uf.union(big, swapped)
                            changed = True

        for g in groups:
            for p, r in combinations(sorted(g, key=lambda x: x.arrows), 2):
                cut = _stripped(quiver, p, r)
                if cut and uf[cut[0]] != uf[cut[1]]:
                    uf.union(*cut)
                    changed = True

    classes = frozenset(frozenset(g) for g in uf.to_sets() if len(g) > 1)
    logger.debug("[Homotopy] closure: %d classes after %d rounds", len(classes), rounds)
    return classes


def relation_from_pairs(quiver, pairs):
    pairs = tuple(pairs)
    return HomotopyRelation(quiver, close_pairs(quiver, pairs), pairs)


def homotopy_closure(ideal):
    q = ideal.quiver
    q.require_acyclic("homotopy_closure")
    q.require_connected("homotopy_closure")
    seeds = []
    for support in seed_supports(ideal):
        seeds.extend((support[0], p) for p in support[1:])
    return relation_from_pairs(q, seeds)


def relations_equal(h1, h2):
    return h1.quiver is h2.quiver and h1.classes == h2.classes


# ---------- successors ----------

class Case(str, Enum):
    FIXED = "fixed"
    COINCIDE = "coincide"
    SUCCESSOR = "successor"
    PREDECESSOR = "predecessor"


@dataclass(frozen=True)
class SuccessorStep:
    case: Case
    ideal: object
    relation: HomotopyRelation
    bypass: object
    scalar: object


def direct_successor_case(ideal, bypass, tau, relation=None):
    """Compare the homotopy relations of ``ideal`` and ``phi_{α,u,τ}(ideal)``.

    ``predecessor`` means ``α ~ u`` holds before the transvection but not
    after it, i.e. the relation of ``ideal`` is a direct successor of the new one.
    """
    q = ideal.quiver
    q.require_acyclic("direct_successor_case")
    if not q.is_bypass(bypass.arrow, bypass.path):
        raise PathError(f"direct_successor_case: {bypass} is not a bypass")
    tau = to_scalar(tau)
    before = relation or homotopy_closure(ideal)
    if tau == 0:
        return SuccessorStep(Case.FIXED, ideal, before, bypass, tau)

    image = ideal.image(transvection(q, bypass.arrow, bypass.path, tau))
    if image == ideal:
        return SuccessorStep(Case.FIXED, ideal, before, bypass, tau)

    after = homotopy_closure(image)
    alpha = q.arrow_path(bypass.arrow)
    pair = (alpha, bypass.path)
    if before.identifies(*pair):
        if after.identifies(*pair):
            if not relations_equal(before, after):
                raise ConsistencyError(
                    f"direct_successor_case: {bypass} identified on both sides but relations differ",
                    [str(ideal), str(image)],
                )
            return SuccessorStep(Case.COINCIDE, image, after, bypass, tau)
        generated = close_pairs(q, after.seed_pairs + (pair,))
        if generated != before.classes:
            raise ConsistencyError(
                f"direct_successor_case: relation of {ideal} is not generated by that of {image} and {bypass}",
                [str(ideal), str(image)],
            )
        return SuccessorStep(Case.PREDECESSOR, image, after, bypass, tau)

    generated = close_pairs(q, before.seed_pairs + (pair,))
    if not after.identifies(*pair) or generated != after.classes:
        raise ConsistencyError(
            f"direct_successor_case: relation of {image} is not generated by that of {ideal} and {bypass}",
            [str(ideal), str(image), str(after)],
        )
    return SuccessorStep(Case.SUCCESSOR, image, after, bypass, tau)


# ---------- fundamental groups ----------

def spanning_tree(quiver, basepoint):
    """Tree arrows of the BFS from ``basepoint``, arrows scanned in arrow order."""
    incident = {v: [] for v in quiver.vertices}
    for label in quiver.arrow_order:
        a = quiver.arrow(label)
        incident[a.source].append(a)
        if a.target != a.source:
            incident[a.target].append(a)

    seen = {basepoint}
    tree = []
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for a in incident[v]:
            other = a.target if a.source == v else a.source
            if other not in seen:
                seen.add(other)
                tree.append(a.label)
                queue.append(other)
    return tree


class FundamentalGroup:
    """Presentation data of ``π1(Q, ~, x0)`` for a fixed spanning tree."""

    def __init__(self, quiver, basepoint=None):
        quiver.require_connected("pi1_presentation")
        self.quiver = quiver
        self.basepoint = basepoint if basepoint is not None else quiver.vertices[0]
        if self.basepoint not in quiver.vertices:
            raise PathError(f"pi1_presentation: unknown basepoint {self.basepoint!r}")
        self.tree = tuple(spanning_tree(quiver, self.basepoint))
        tree = set(self.tree)
        self.generators = tuple(label for label in quiver.arrow_order if label not in tree)
        self.index = {label: k + 1 for k, label in enumerate(self.generators)}

    def word_of_path(self, path):
        return tuple(self.index[a] for a in path.arrows if a in self.index)

    def word_of_walk(self, walk):
        return tuple(self.index[a] * d for a, d in walk.letters if a in self.index)

    def relator(self, u, v):
        return self.word_of_path(u) + invert_word(self.word_of_path(v))

    def presentation(self, relation):
        relators = [self.relator(u, v) for u, v in relation.seed_pairs]
        return GroupPresentation(self.generators, canonical_relators(relators), self.basepoint)


def pi1_presentation(relation, basepoint=None):
    return FundamentalGroup(relation.quiver, basepoint).presentation(relation)


@dataclass(frozen=True)
class SurjectionWitness:
    """Identity-on-generators map ``π1(Q, ~from) -> π1(Q, ~to)``.

    ``checked`` lists the source relators together with the pair of paths
    identified by the target relation that makes each one trivial.
    """

    source: GroupPresentation
    target: GroupPresentation
    generator_map: tuple
    checked: tuple = ()

    def compose(self, other):
        if self.target.generators != other.source.generators:
            raise NotComparableError("SurjectionWitness: presentations use different generators")
        images = dict(other.generator_map)
        mapping = tuple((g, images[h]) for g, h in self.generator_map)
        return SurjectionWitness(self.source, other.target, mapping, self.checked)


def surjection_witness(h_from, h_to, basepoint=None):
    if h_from.quiver is not h_to.quiver:
        raise NotComparableError("surjection_witness: relations over different quivers")
    if not h_from.is_refined_by(h_to):
        raise NotComparableError("surjection_witness: the source relation identifies paths the target keeps apart")
    group = FundamentalGroup(h_from.quiver, basepoint)
    checked = []
    for u, v in h_from.seed_pairs:
        if not h_to.identifies(u, v):
            raise NotComparableError(f"surjection_witness: {render(u)} ~ {render(v)} fails in the target")
        checked.append((group.relator(u, v), (u, v)))
    return SurjectionWitness(
        group.presentation(h_from),
        group.presentation(h_to),
        tuple((g, g) for g in group.generators),
        tuple(checked),
    )
