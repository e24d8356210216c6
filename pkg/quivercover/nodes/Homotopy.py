from ..errors import UsageError
from ..homotopy import direct_successor_case, homotopy_closure
from ..quiver import Bypass
from ..report import Report
from ..vectors import parse_scalar
from .common import CATEGORY, WORKSPACE, lookup_ideal, path_text


class Homotopy:
    """
    Prints the classes of paths identified by the homotopy relation of an ideal.

    With ``arrow`` and ``path`` (a bypass) it also classifies the relation of
    the ideal against the one after the transvection by ``scalar``.
    """

    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "ideal": ("IDEAL",),
            },
            "optional": {
                "arrow": ("STRING", {"default": ""}),
                "path": ("STRING", {"default": ""}),
                "scalar": ("STRING", {"default": "1"}),
            },
        }

    DESCRIPTION = "Homotopy relation of a presentation and its direct successors."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "homotopy"

    def homotopy(self, workspace, ideal, arrow="", path="", scalar="1"):
        I = lookup_ideal(workspace, ideal)
        relation = homotopy_closure(I)
        classes = relation.sorted_classes()
        report = Report("homotopy")
        report.add(f"relation: {relation}")
        pairs = [(path_text(u), path_text(v)) for u, v in relation.pairs()]
        report.add("pairs: " + (", ".join(f"({u},{v})" for u, v in pairs) or "none"))
        report.data = {"classes": [[path_text(p) for p in c] for c in classes], "pairs": [list(p) for p in pairs]}

        if bool(arrow) != bool(path):
            raise UsageError("homotopy: --arrow and --path go together")
        if arrow:
            q = workspace.quiver
            bypass = Bypass(arrow, q.path(path))
            step = direct_successor_case(I, bypass, parse_scalar(scalar), relation)
            report.add(f"{bypass} tau={scalar}: {step.case.value}")
            report.add(f"image: {step.ideal}")
            report.add(f"relation after: {step.relation}")
            report.data["case"] = step.case.value
            report.data["after"] = [[path_text(p) for p in c] for c in step.relation.sorted_classes()]
        return (report,)


NODE_CLASS_MAPPINGS = {
    "homotopy": Homotopy
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "homotopy": "Homotopy Relation"
}
