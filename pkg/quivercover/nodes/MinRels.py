from ..ideals import minimal_relations, minimal_support_relations
from ..report import Report
from .common import CATEGORY, SETTINGS_INPUT, WORKSPACE, lookup_ideal, read_element, settings_or_default


class MinRels:
    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "ideal": ("IDEAL",),
            },
            "optional": {
                "element": ("ELEMENT", {"default": ""}),
            },
            "hidden": SETTINGS_INPUT,
        }

    DESCRIPTION = (
        "Splits an element of the ideal into minimal relations; without an element, "
        "lists the relations of minimal support of every hom-space."
    )
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "minimal_relations"

    def minimal_relations(self, workspace, ideal, element="", settings=None):
        settings = settings_or_default(settings)
        I = lookup_ideal(workspace, ideal)
        report = Report("minrels")
        if element:
            found = minimal_relations(I, read_element(workspace, element), settings)
            report.extend(str(m) for m in found)
            report.data = {"relations": [str(m) for m in found]}
            return (report,)

        spaces = {}
        for x, y in workspace.quiver.hom_spaces():
            found = minimal_support_relations(I, x, y, settings)
            if not found:
                continue
            spaces[f"{x},{y}"] = [str(m) for m in found]
            report.add(f"hom({x},{y}): " + ", ".join(str(m) for m in found))
        report.data = {"spaces": spaces}
        return (report,)


NODE_CLASS_MAPPINGS = {
    "minrels": MinRels
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "minrels": "Minimal Relations"
}
