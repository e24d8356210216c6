from ..ideals import membership
from ..report import Report
from ..vectors import format_scalar
from .common import CATEGORY, WORKSPACE, lookup_ideal, path_text, read_element


class NormalForm:
    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "element": ("ELEMENT",),
            },
            "optional": {
                "ideal": ("IDEAL", {"default": ""}),
            },
        }

    DESCRIPTION = "Normal form of a linear combination of parallel paths; with an ideal, reduces it modulo the ideal."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "normal_form"

    def normal_form(self, workspace, element, ideal=""):
        r = read_element(workspace, element)
        report = Report("normalform")
        report.add(str(r))
        report.add(r.to_text())
        report.data = {
            "element": str(r),
            "terms": [[path_text(p), format_scalar(c)] for p, c in r.terms],
        }
        if ideal:
            found = membership(lookup_ideal(workspace, ideal), r)
            if found.member:
                coords = ", ".join(f"{format_scalar(c)} on r_{path_text(p)}" for p, c in found.coordinates)
                report.add(f"member of {ideal}: yes ({coords})")
            else:
                report.add(f"member of {ideal}: no, remainder {found.remainder}")
            report.data["member"] = found.member
            report.data["remainder"] = str(found.remainder)
        return (report,)


NODE_CLASS_MAPPINGS = {
    "normalform": NormalForm
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "normalform": "Normal Form"
}
