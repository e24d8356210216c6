"""Weights of arrows and the total order on nontrivial paths and bypasses.

W(α) is the number of bypasses with arrow α and W of a path is the sum over
its arrows. Paths compare by weight first, then lexicographically under the
arrow order, reading arrows in composition order (last traversed arrow
first); a proper prefix is smaller.
"""

from dataclasses import dataclass

from .errors import PathError


@dataclass(frozen=True)
class WeightTable:
    weights: dict

    def __getitem__(self, label):
        return self.weights[label]

    def of(self, path):
        return sum(self.weights[a] for a in path.arrows)


class PathOrder:
    """Weighted order on the paths of a quiver.

    ``basis_key`` is usable on every acyclic quiver (it falls back to length
    then arrow order when the quiver has multiple arrows); ``weight``,
    ``compare_paths`` and ``compare_bypasses`` require a quiver without
    multiple arrows.
    """

    def __init__(self, quiver):
        quiver.require_acyclic("path order")
        self.quiver = quiver
        self.weighted = quiver.no_multiple_arrows
        self.table = WeightTable({a.label: len(quiver.bypass_set(a.label)) for a in quiver.arrows})

    def _require_weighted(self, what):
        self.quiver.require_simple(what)

    def weight(self, path):
        self._require_weighted("weight")
        if path.is_stationary:
            raise PathError("weight: stationary paths carry no weight")
        return self.table.of(path)

    def path_key(self, path):
        self._require_weighted("compare_paths")
        return self._key(path)

    def _key(self, path):
        rank = self.quiver.rank
        return (self.table.of(path), tuple(rank[a] for a in reversed(path.arrows)))

    def basis_key(self, path):
        if self.weighted:
            return self._key(path)
        rank = self.quiver.rank
        return (path.length, tuple(rank[a] for a in reversed(path.arrows)))

    def bypass_key(self, bypass):
        if self.weighted:
            return (self._key(self.quiver.arrow_path(bypass.arrow)), self._key(bypass.path))
        return (self.quiver.rank[bypass.arrow], self.basis_key(bypass.path))

    def compare_paths(self, u, v):
        """-1, 0 or 1 as ``u`` is smaller than, equal to or greater than ``v``."""
        if u.is_stationary or v.is_stationary:
            raise PathError("compare_paths: the order is defined on nontrivial paths")
        ku, kv = self.path_key(u), self.path_key(v)
        return (ku > kv) - (ku < kv)

    def compare_bypasses(self, p, q):
        self._require_weighted("compare_bypasses")
        kp, kq = self.bypass_key(p), self.bypass_key(q)
        return (kp > kq) - (kp < kq)

    def sorted_bypasses(self):
        return sorted(self.quiver.bypasses(), key=self.bypass_key)


def order_of(quiver):
    """The ``PathOrder`` of a quiver, built on first use."""
    order = getattr(quiver, "_order", None)
    if order is None:
        order = PathOrder(quiver)
        quiver._order = order
    return order
