"""Finite quivers, paths, walks and bypasses.

Paths are stored in traversal order (source to target). The usual algebraic
notation writes composition right to left, so ``render`` reverses the arrow
list: the stored path ``c e f`` is rendered ``fec``.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .errors import HypothesisError, PathError, StructuralError

logger = logging.getLogger(__name__)

REPLACEMENT_CACHE_SIZE = 4096

FORWARD = 1
INVERSE = -1


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple = ()

    @property
    def length(self):
        return len(self.arrows)

    @property
    def is_stationary(self):
        return not self.arrows

    def is_parallel(self, other):
        return self.source == other.source and self.target == other.target

    def then(self, other):
        """Traversal concatenation: walk ``self`` first, then ``other``."""
        if self.target != other.source:
            raise PathError(f"Path: cannot follow {self} (ends at {self.target}) by {other} (starts at {other.source})")
        return Path(self.source, other.target, self.arrows + other.arrows)

    def as_walk(self):
        return Walk(self.source, self.target, tuple((a, FORWARD) for a in self.arrows))

    def __str__(self):
        if self.is_stationary:
            return f"e_{self.source}"
        return " ".join(self.arrows)


@dataclass(frozen=True)
class Walk:
    source: str
    target: str
    letters: tuple = ()

    @property
    def is_closed(self):
        return self.source == self.target

    def then(self, other):
        if self.target != other.source:
            raise PathError(f"Walk: endpoint mismatch {self.target} != {other.source}")
        return Walk(self.source, other.target, self.letters + other.letters)

    def inverse(self):
        return Walk(self.target, self.source, tuple((a, -d) for a, d in reversed(self.letters)))

    def reduced(self):
        stack = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return Walk(self.source, self.target, tuple(stack))

    def __str__(self):
        if not self.letters:
            return f"e_{self.source}"
        return " ".join(a if d == FORWARD else f"{a}^-1" for a, d in self.letters)


@dataclass(frozen=True)
class Bypass:
    arrow: str
    path: Path

    def __str__(self):
        return f"({self.arrow},{render(self.path)})"


@dataclass(frozen=True)
class DoubleBypass:
    """``outer = (α, u)`` and ``inner = (β, v)`` with ``u = prefix · β · suffix``.

    ``prefix`` and ``suffix`` are in traversal order, so in composition
    notation ``u = suffix β prefix``.
    """

    outer: Bypass
    inner: Bypass
    prefix: Path
    suffix: Path

    def replaced(self):
        return self.prefix.then(self.inner.path).then(self.suffix)

    def as_tuple(self):
        return (self.outer.arrow, self.outer.path, self.inner.arrow, self.inner.path)


@dataclass(frozen=True)
class ValidationReport:
    acyclic: bool
    no_multiple_arrows: bool
    connected: bool


def render(path):
    """Composition-order rendering: ``c e f`` becomes ``fec``."""
    if path.is_stationary:
        return f"e_{path.source}"
    labels = list(reversed(path.arrows))
    if all(len(a) == 1 for a in labels):
        return "".join(labels)
    return "·".join(labels)


class Quiver:
    """A finite quiver with a total order on its arrows.

    ``arrow_order`` defaults to the listing order. Path enumeration, hom-space
    lookup and bypass sets are computed once at construction when the quiver
    has no oriented cycle.
    """

    def __init__(self, vertices, arrows, arrow_order=None):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise StructuralError("Quiver: duplicate vertex id")

        seen = set()
        built = []
        for item in arrows:
            arrow = item if isinstance(item, Arrow) else Arrow(*(str(x) for x in item))
            if arrow.label in seen:
                raise StructuralError(f"Quiver: duplicate arrow label {arrow.label!r}")
            if arrow.label in self.vertices:
                raise StructuralError(f"Quiver: label {arrow.label!r} is also a vertex id")
            for end in (arrow.source, arrow.target):
                if end not in self.vertices:
                    raise StructuralError(f"Quiver: arrow {arrow.label!r} uses undeclared vertex {end!r}")
            seen.add(arrow.label)
            built.append(arrow)
        self.arrows = tuple(built)
        self._arrows = {a.label: a for a in self.arrows}

        if arrow_order is None:
            arrow_order = [a.label for a in self.arrows]
        arrow_order = tuple(arrow_order)
        if sorted(arrow_order) != sorted(self._arrows):
            raise StructuralError("Quiver: arrow order must list every arrow exactly once")
        self.arrow_order = arrow_order
        self.rank = {label: i for i, label in enumerate(arrow_order)}

        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((a.source, a.target, a.label) for a in self.arrows)
        self.graph = graph

        self.acyclic = nx.is_directed_acyclic_graph(graph)
        ends = [(a.source, a.target) for a in self.arrows]
        self.no_multiple_arrows = len(ends) == len(set(ends))
        self.connected = len(self.vertices) > 0 and nx.is_weakly_connected(graph)

        self._hom = None
        self._bypasses = None
        self._order = None
        if self.acyclic:
            self._hom = self._enumerate()
            self._bypasses = self._collect_bypasses()
        logger.debug(
            "[Quiver] %d vertices, %d arrows, acyclic=%s, no_multiple_arrows=%s",
            len(self.vertices), len(self.arrows), self.acyclic, self.no_multiple_arrows,
        )

    # ---------- construction helpers ----------

    def arrow(self, label):
        try:
            return self._arrows[label]
        except KeyError:
            raise PathError(f"Quiver: unknown arrow {label!r}") from None

    def stationary(self, vertex):
        if vertex not in self.vertices:
            raise PathError(f"Quiver: unknown vertex {vertex!r}")
        return Path(vertex, vertex, ())

    def path(self, *labels):
        """Build a path from arrow labels in traversal order.

        Accepts separate labels or a single space-separated string.
        """
        if len(labels) == 1 and isinstance(labels[0], str) and " " in labels[0].strip():
            labels = tuple(labels[0].split())
        if len(labels) == 1 and isinstance(labels[0], (list, tuple)):
            labels = tuple(labels[0])
        if not labels:
            raise PathError("Quiver: a path needs at least one arrow; use stationary() for e_x")
        arrows = [self.arrow(label) for label in labels]
        for left, right in zip(arrows, arrows[1:]):
            if left.target != right.source:
                raise PathError(f"Quiver: arrows {left.label!r} and {right.label!r} do not compose")
        return Path(arrows[0].source, arrows[-1].target, tuple(a.label for a in arrows))

    def arrow_path(self, label):
        a = self.arrow(label)
        return Path(a.source, a.target, (label,))

    def walk(self, letters, source=None):
        """Build a walk from ``(label, ±1)`` letters; ``source`` is needed only when empty."""
        letters = tuple((label, FORWARD if d >= 0 else INVERSE) for label, d in letters)
        if not letters:
            if source is None:
                raise PathError("Quiver: an empty walk needs a source vertex")
            return Walk(source, source, ())
        position = None
        start = None
        for label, d in letters:
            a = self.arrow(label)
            tail, head = (a.source, a.target) if d == FORWARD else (a.target, a.source)
            if position is None:
                start = tail
            elif position != tail:
                raise PathError(f"Quiver: walk letter {label!r} does not start at {position!r}")
            position = head
        return Walk(start, position, letters)

    # ---------- requirements ----------

    def require_acyclic(self, what):
        if not self.acyclic:
            raise HypothesisError(f"{what}: quiver has an oriented cycle")

    def require_simple(self, what):
        self.require_acyclic(what)
        if not self.no_multiple_arrows:
            raise HypothesisError(f"{what}: quiver has multiple arrows")

    def require_connected(self, what):
        if not self.connected:
            raise HypothesisError(f"{what}: quiver is not connected")

    # ---------- enumeration ----------

    def _enumerate(self):
        outgoing = defaultdict(list)
        for a in sorted(self.arrows, key=lambda a: self.rank[a.label]):
            outgoing[a.source].append(a)

        hom = defaultdict(list)
        for x in self.vertices:
            stack = [Path(x, x, ())]
            while stack:
                p = stack.pop()
                hom[(x, p.target)].append(p)
                for a in outgoing[p.target]:
                    stack.append(Path(x, a.target, p.arrows + (a.label,)))

        key = lambda p: (p.length, tuple(self.rank[a] for a in p.arrows))
        return {k: tuple(sorted(v, key=key)) for k, v in hom.items()}

    def hom(self, x, y):
        """All paths from ``x`` to ``y``, stationary included."""
        self.require_acyclic("enumerate_paths")
        return self._hom.get((x, y), ())

    def enumerate_paths(self):
        self.require_acyclic("enumerate_paths")
        return dict(self._hom)

    def nontrivial_paths(self):
        self.require_acyclic("enumerate_paths")
        return tuple(p for paths in self._hom.values() for p in paths if p.length)

    def hom_spaces(self):
        """Pairs ``(x, y)`` carrying at least one nontrivial path, in vertex order."""
        self.require_acyclic("enumerate_paths")
        pairs = []
        for x in self.vertices:
            for y in self.vertices:
                if any(p.length for p in self._hom.get((x, y), ())):
                    pairs.append((x, y))
        return pairs

    def paths_into(self, x):
        return tuple(p for (s, t), paths in self._hom.items() if t == x for p in paths)

    def paths_from(self, x):
        return tuple(p for (s, t), paths in self._hom.items() if s == x for p in paths)

    # ---------- bypasses ----------

    def _collect_bypasses(self):
        sets = {}
        for a in self.arrows:
            single = (a.label,)
            sets[a.label] = tuple(
                Bypass(a.label, p) for p in self._hom.get((a.source, a.target), ()) if p.arrows != single
            )
        return sets

    def bypasses(self):
        self.require_acyclic("bypasses")
        return [b for a in self.arrows for b in self._bypasses[a.label]]

    def bypass_set(self, label):
        self.require_acyclic("bypasses")
        self.arrow(label)
        return self._bypasses[label]

    def is_bypass(self, label, path):
        a = self.arrow(label)
        return path.source == a.source and path.target == a.target and path.arrows != (label,) and path.length > 0

    def double_bypasses(self):
        self.require_simple("double_bypasses")
        found = []
        for outer in self.bypasses():
            u = outer.path
            for i, beta in enumerate(u.arrows):
                prefix = Path(u.source, self.arrow(beta).source, u.arrows[:i])
                suffix = Path(self.arrow(beta).target, u.target, u.arrows[i + 1:])
                for inner in self._bypasses[beta]:
                    found.append(DoubleBypass(outer, inner, prefix, suffix))
        return found

    # ---------- derivation ----------

    def _replacements(self, u, v):
        """Every replacement pattern turning ``u`` into ``v``.

        A pattern is a tuple of ``(position in u, bypass path)`` pairs.
        """
        return _replacement_patterns(self, u, v)

    def derivation_order(self, u, v):
        """Order ``t`` such that ``v`` is derived of ``u``, or ``None``."""
        self.require_simple("derivation_order")
        if not u.is_parallel(v):
            raise PathError(f"derivation_order: {u} and {v} are not parallel")
        patterns = self._replacements(u, v)
        if not patterns:
            return None
        return min(len(p) for p in patterns)

    def derivation_chain(self, u, v):
        """Paths ``u = u_0, ..., u_t = v``, each derived of the previous one of order 1."""
        self.require_simple("derivation_chain")
        patterns = self._replacements(u, v)
        if not patterns:
            return None
        pattern = min(patterns, key=len)
        chain = [u]
        arrows = list(u.arrows)
        shift = 0
        for i, p in pattern:
            at = i + shift
            arrows[at:at + 1] = list(p.arrows)
            shift += p.length - 1
            chain.append(Path(u.source, u.target, tuple(arrows)))
        return chain

    def replace_arrow(self, u, beta, v):
        a = self.arrow(beta)
        if v.source != a.source or v.target != a.target:
            raise PathError(f"replace_arrow: {v} is not parallel to {beta!r}")
        if beta not in u.arrows:
            raise PathError(f"replace_arrow: {beta!r} does not occur in {u}")
        i = u.arrows.index(beta)
        return Path(u.source, u.target, u.arrows[:i] + v.arrows + u.arrows[i + 1:])

    def validate(self):
        return ValidationReport(self.acyclic, self.no_multiple_arrows, self.connected)


@lru_cache(maxsize=REPLACEMENT_CACHE_SIZE)
def _replacement_patterns(quiver, u, v):
    memo = {}

    def match(i, j):
        if (i, j) in memo:
            return memo[(i, j)]
        if i == len(u.arrows):
            found = [()] if j == len(v.arrows) else []
            memo[(i, j)] = found
            return found
        found = []
        label = u.arrows[i]
        if j < len(v.arrows) and v.arrows[j] == label:
            found.extend(match(i + 1, j + 1))
        for b in quiver._bypasses[label]:
            n = b.path.length
            if v.arrows[j:j + n] == b.path.arrows:
                found.extend(((i, b.path),) + rest for rest in match(i + 1, j + n))
        memo[(i, j)] = found
        return found

    return tuple(match(0, 0))


def validate_quiver(q):
    return q.validate()
