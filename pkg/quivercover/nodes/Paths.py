from ..report import Report
from .common import CATEGORY, WORKSPACE, path_text


class Paths:
    """
    Lists the paths of the quiver grouped by (source, target).

    Inside a group the paths come by length, then by the arrow order.
    ``source``/``target`` restrict the listing to matching groups.
    """

    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
            },
            "optional": {
                "source": ("VERTEX", {"default": ""}),
                "target": ("VERTEX", {"default": ""}),
                "nontrivial": ("BOOLEAN", {"default": False}),
            },
        }

    DESCRIPTION = "Enumerates all paths of an acyclic quiver."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "paths"

    def paths(self, workspace, source="", target="", nontrivial=False):
        q = workspace.quiver
        hom = q.enumerate_paths()
        report = Report("paths")
        groups = {}
        for x in q.vertices:
            for y in q.vertices:
                if source and x != source or target and y != target:
                    continue
                paths = [p for p in hom.get((x, y), ()) if p.length or not nontrivial]
                if not paths:
                    continue
                names = [path_text(p) for p in paths]
                groups[f"{x},{y}"] = names
                report.add(f"hom({x},{y}): {', '.join(names)}")
        report.data = {"hom": groups}
        return (report,)


NODE_CLASS_MAPPINGS = {
    "paths": Paths
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "paths": "Enumerate Paths"
}
