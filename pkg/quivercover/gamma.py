"""The quiver Γ of homotopy relations reachable from a monomial presentation.

Nodes are homotopy relations, each carrying a few ideals realizing it;
an edge ``h -> h'`` records a transvection taking a representative of ``h`` to
an ideal whose relation is a direct successor. ``certify_universal`` bundles
the canonical automorphism, its path in Γ and the surjection of fundamental
groups into one checked certificate.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .errors import (
    CapacityError,
    ConsistencyError,
    PreconditionError,
    QuiverCoverError,
    StageError,
)
from .groups import abelian_invariants, simplify_presentation
from .homotopy import (
    Case,
    direct_successor_case,
    homotopy_closure,
    pi1_presentation,
    relations_equal,
    surjection_witness,
)
from .ideals import compute_psi_I, is_monomial, satisfies_psi_conditions
from .order import order_of
from .quiver import render
from .settings import Settings

logger = logging.getLogger(__name__)


@dataclass
class GammaNode:
    id: str
    key: object
    relation: object
    representatives: list = field(default_factory=list)
    invariants: object = None
    depth: int = 0
    root: bool = False

    @property
    def ideal(self):
        return self.representatives[0]


@dataclass(frozen=True)
class GammaEdge:
    source: str
    target: str
    bypass: object
    scalar: object


@dataclass(frozen=True)
class SourceCheck:
    unique: bool
    sources: tuple


class GammaGraph:
    def __init__(self, ideal0, reachable_only=False):
        self.quiver = ideal0.quiver
        self.ideal0 = ideal0
        self.reachable_only = reachable_only
        self.nodes = {}
        self.edges = []
        self._by_key = {}
        self._edge_pairs = set()

    def key_of(self, ideal, relation):
        if self.quiver.no_multiple_arrows:
            return relation.classes
        # parallel arrows: <ca> and <cb> share the trivial relation
        return (relation.classes, ideal.paths())

    def lookup(self, ideal, relation):
        return self._by_key.get(self.key_of(ideal, relation))

    def add_node(self, ideal, relation):
        node = GammaNode(f"n{len(self.nodes)}", self.key_of(ideal, relation), relation, [ideal])
        node.invariants = abelian_invariants(pi1_presentation(relation))
        self.nodes[node.id] = node
        self._by_key[node.key] = node
        logger.debug("[Gamma] node %s %s from %s", node.id, node.invariants, ideal)
        return node

    def add_edge(self, source, target, bypass, scalar):
        if (source, target) in self._edge_pairs:
            return False
        self._edge_pairs.add((source, target))
        self.edges.append(GammaEdge(source, target, bypass, scalar))
        logger.debug("[Gamma] edge %s -> %s by %s", source, target, bypass)
        return True

    @property
    def root(self):
        return next(n for n in self.nodes.values() if n.root and self.ideal0 in n.representatives)

    def to_networkx(self):
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from((e.source, e.target) for e in self.edges)
        return g

    def sources(self):
        g = self.to_networkx()
        return [n for n in self.nodes if g.in_degree(n) == 0]

    def sinks(self):
        g = self.to_networkx()
        return [n for n in self.nodes if g.out_degree(n) == 0]

    def layers(self):
        grouped = {}
        for node in self.nodes.values():
            grouped.setdefault(node.depth, []).append(node.id)
        return [grouped[d] for d in sorted(grouped)]

    def node_for(self, ideal, relation):
        return self.lookup(ideal, relation)

    def __len__(self):
        return len(self.nodes)


def build_gamma(ideal0, settings=None, extra_roots=()):
    """Breadth-first exploration of Γ from ``ideal0`` and any ``extra_roots``."""
    settings = settings or Settings()
    q = ideal0.quiver
    q.require_acyclic("build_gamma")
    if not is_monomial(ideal0):
        raise PreconditionError(f"build_gamma: {ideal0} is not monomial")

    extra_roots = tuple(extra_roots)
    gamma = GammaGraph(ideal0, reachable_only=bool(extra_roots) or not q.no_multiple_arrows)
    bypasses = order_of(q).sorted_bypasses()
    queue = deque()
    explored = set()

    def place(ideal, relation):
        node = gamma.lookup(ideal, relation)
        if node is None:
            if len(gamma.nodes) >= settings.node_cap:
                raise CapacityError(f"build_gamma: more than {settings.node_cap} nodes", partial=gamma)
            node = gamma.add_node(ideal, relation)
            queue.append((node.id, ideal))
        elif ideal not in node.representatives and len(node.representatives) < settings.representative_cap:
            node.representatives.append(ideal)
            queue.append((node.id, ideal))
        return node

    for root in (ideal0,) + extra_roots:
        place(root, homotopy_closure(root)).root = True

    while queue:
        node_id, ideal = queue.popleft()
        if ideal in explored:
            continue
        explored.add(ideal)
        node = gamma.nodes[node_id]
        for bypass in bypasses:
            for tau in settings.tau_scalars:
                step = direct_successor_case(ideal, bypass, tau, node.relation)
                if step.case is Case.FIXED:
                    continue
                other = place(step.ideal, step.relation)
                if step.case is Case.SUCCESSOR:
                    gamma.add_edge(node.id, other.id, bypass, tau)
                elif step.case is Case.PREDECESSOR:
                    gamma.add_edge(other.id, node.id, bypass, -tau)

    g = gamma.to_networkx()
    if not nx.is_directed_acyclic_graph(g):
        raise ConsistencyError("build_gamma: Γ has an oriented cycle", [str(e) for e in gamma.edges])
    for n in nx.topological_sort(g):
        preds = list(g.predecessors(n))
        gamma.nodes[n].depth = max((gamma.nodes[p].depth + 1 for p in preds), default=0)
    logger.debug("[Gamma] %d nodes, %d edges", len(gamma.nodes), len(gamma.edges))
    return gamma


def unique_source_check(gamma):
    sources = tuple(gamma.sources())
    return SourceCheck(sources == (gamma.root.id,), sources)


# ---------- realization and certificates ----------

@dataclass(frozen=True)
class RealizationStep:
    factor: object
    case: Case
    ideal: object
    relation: object
    node: str = None


@dataclass(frozen=True)
class RealizedPath:
    start: object
    steps: tuple

    @property
    def length(self):
        return sum(1 for s in self.steps if s.case is Case.SUCCESSOR)

    @property
    def relations(self):
        return (self.start,) + tuple(s.relation for s in self.steps)

    @property
    def nodes(self):
        return tuple(s.node for s in self.steps)


def realize_path(ideal0, product, gamma=None):
    """Walk ``I_0 -> I_1 -> ... -> I_n`` along the factors of the canonical automorphism.

    At every step the transvected arrow must be homotopic to its bypass path
    in the new presentation; a failure raises ``ConsistencyError`` with the trace.
    """
    q = ideal0.quiver
    q.require_simple("realize_path")
    if not satisfies_psi_conditions(ideal0, product):
        raise PreconditionError("realize_path: a factor preserves I0, the product is not canonical")

    ideal = ideal0
    relation = homotopy_closure(ideal0)
    start = relation
    steps = []
    trace = [f"I0 = {ideal0}"]
    for factor in product.factors:
        step = direct_successor_case(ideal, factor.bypass, factor.scalar, relation)
        trace.append(f"{factor}: {step.case.value} -> {step.ideal}")
        if step.case is Case.PREDECESSOR:
            raise ConsistencyError(f"realize_path: {factor} goes against Γ", trace)
        ideal, relation = step.ideal, step.relation
        if not relation.identifies(q.arrow_path(factor.arrow), factor.path):
            raise ConsistencyError(
                f"realize_path: {factor.arrow} and {render(factor.path)} are not homotopic after {factor}", trace
            )
        node = gamma.node_for(ideal, relation) if gamma is not None else None
        steps.append(RealizationStep(factor, step.case, ideal, relation, node.id if node else None))
    return RealizedPath(start, tuple(steps))


@dataclass(frozen=True)
class UniversalCoverCertificate:
    ideal0: object
    ideal: object
    psi: object
    path: RealizedPath
    witness: object
    kernel_generators: tuple
    simplified_target: object

    @property
    def kernel_texts(self):
        return [self.witness.target.word_text(w) for w in self.kernel_generators]


def certify_universal(ideal0, ideal, seed, settings=None):
    settings = settings or Settings()
    stage = "psi"
    try:
        psi = compute_psi_I(ideal0, ideal, seed)
        stage = "realize"
        path = realize_path(ideal0, psi)
        stage = "surjection"
        target = homotopy_closure(ideal)
        witness = surjection_witness(path.start, target)
        stage = "verify"
        if ideal0.image(psi.evaluate()) != ideal:
            raise ConsistencyError("certify_universal: ψ_I does not map I0 to I")
        if not relations_equal(path.relations[-1], target):
            raise ConsistencyError("certify_universal: realized path does not end at the target relation")
        simplified = simplify_presentation(witness.target, settings.tietze_budget)
    except QuiverCoverError as exc:
        raise StageError(stage, exc) from exc

    return UniversalCoverCertificate(
        ideal0, ideal, psi, path, witness, witness.target.relators, simplified
    )


def export_dot(gamma):
    builder = ["digraph gamma {"]
    for node in gamma.nodes.values():
        label = f"{node.invariants} | {node.ideal}".replace('"', '\\"')
        builder.append(f'  {node.id} [label="{label}"];')
    for edge in gamma.edges:
        builder.append(f'  {edge.source} -> {edge.target} [label="{edge.bypass}"];')
    builder.append("}")
    return "\n".join(builder) + "\n"
