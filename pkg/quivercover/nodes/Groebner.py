from ..ideals import groebner_structure, is_monomial
from ..report import Report
from .common import CATEGORY, WORKSPACE, lookup_ideal, path_text


class Groebner:
    """
    Prints the Gröbner basis of an ideal hom-space by hom-space.

    With ``monomial`` naming a monomial ideal I0 it also prints the map
    u -> r_u from the paths of I0 to the Gröbner elements they lead.
    """

    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "ideal": ("IDEAL",),
            },
            "optional": {
                "monomial": ("IDEAL", {"default": ""}),
            },
        }

    DESCRIPTION = "Gröbner basis of an admissible ideal and its structure over a monomial ideal."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "groebner"

    def groebner(self, workspace, ideal, monomial=""):
        I = lookup_ideal(workspace, ideal)
        q = workspace.quiver
        report = Report("groebner")
        spaces = {}
        for x, y in q.hom_spaces():
            rows = I.basis(x, y)
            if not rows:
                continue
            spaces[f"{x},{y}"] = [str(r) for r in rows]
            report.add(f"hom({x},{y}) dim {len(rows)}: " + ", ".join(str(r) for r in rows))
        report.add(f"monomial: {'yes' if is_monomial(I) else 'no'}")
        report.data = {"spaces": spaces, "monomial": is_monomial(I)}

        if monomial:
            table = groebner_structure(lookup_ideal(workspace, monomial), I)
            report.add(f"structure over {monomial}:")
            for u, r in table.items():
                report.add(f"  {path_text(u)} -> {r}")
            report.data["structure"] = {path_text(u): str(r) for u, r in table.items()}
        return (report,)


NODE_CLASS_MAPPINGS = {
    "groebner": Groebner
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "groebner": "Gröbner Basis"
}
