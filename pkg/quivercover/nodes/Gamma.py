from pathlib import Path

from ..errors import UsageError
from ..gamma import build_gamma, export_dot, unique_source_check
from ..report import Report
from .common import CATEGORY, SETTINGS_INPUT, WORKSPACE, lookup_ideal, settings_or_default, yes_no


class Gamma:
    """
    Explores the quiver Γ of homotopy relations reachable from a monomial ideal.

    ``extra_root`` names further ideals explored as roots (needed on quivers
    with multiple arrows). ``dot`` is a file the Graphviz text is written to;
    ``-`` prints it instead of the listing.
    """

    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "i0": ("IDEAL",),
            },
            "optional": {
                "extra_root": ("IDEAL", {"multiple": True}),
                "dot": ("STRING", {"default": ""}),
            },
            "hidden": SETTINGS_INPUT,
        }

    DESCRIPTION = "Builds Γ, checks that the monomial presentation is its unique source."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "gamma"

    def gamma(self, workspace, i0, extra_root=None, dot="", settings=None):
        settings = settings_or_default(settings)
        extra = [lookup_ideal(workspace, n) for n in extra_root or ()]
        gamma = build_gamma(lookup_ideal(workspace, i0), settings, extra)
        check = unique_source_check(gamma)

        report = Report("gamma")
        nodes = []
        for node in gamma.nodes.values():
            nodes.append({
                "id": node.id,
                "depth": node.depth,
                "ideal": str(node.ideal),
                "relation": str(node.relation),
                "free_rank": node.invariants.free_rank,
                "torsion": list(node.invariants.torsion),
            })
        edges = [
            {"source": e.source, "target": e.target, "bypass": str(e.bypass), "scalar": str(e.scalar)}
            for e in gamma.edges
        ]
        report.data = {
            "nodes": nodes,
            "edges": edges,
            "layers": gamma.layers(),
            "sources": list(check.sources),
            "unique_source": check.unique,
            "reachable_only": gamma.reachable_only,
        }
        if dot == "-":
            report.extend(export_dot(gamma).splitlines())
            return (report,)

        report.add(f"nodes: {len(gamma)}, edges: {len(gamma.edges)}")
        report.add("layers: " + "/".join(str(len(layer)) for layer in gamma.layers()))
        report.add(f"sources: {', '.join(check.sources)}")
        report.add(f"unique source: {yes_no(check.unique)}")
        if gamma.reachable_only:
            report.add("note: only the part reachable from the given roots is explored")
        for node in gamma.nodes.values():
            report.add(f"{node.id} [depth {node.depth}] {node.invariants}  {node.ideal}")
        for e in gamma.edges:
            report.add(f"{e.source} -> {e.target} {e.bypass} tau={e.scalar}")
        if dot:
            try:
                Path(dot).write_text(export_dot(gamma), encoding="utf-8")
            except OSError as e:
                raise UsageError(f"cannot write {dot}: {e.strerror or e}") from None
            report.add(f"dot: {dot}")
            report.data["dot"] = dot
        return (report,)


NODE_CLASS_MAPPINGS = {
    "gamma": Gamma
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "gamma": "Quiver of Homotopy Relations"
}
