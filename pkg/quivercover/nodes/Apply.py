from ..automorphisms import apply
from ..errors import UsageError
from ..report import Report
from .common import CATEGORY, WORKSPACE, lookup_ideal, read_element, word_or_text


class Apply:
    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "word": ("WORD",),
            },
            "optional": {
                "element": ("ELEMENT", {"default": ""}),
                "ideal": ("IDEAL", {"default": ""}),
            },
        }

    DESCRIPTION = "Applies an automorphism to an element or to an ideal."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "apply"

    def apply(self, workspace, word, element="", ideal=""):
        if bool(element) == bool(ideal):
            raise UsageError("apply: give exactly one of --element and --ideal")
        psi = word_or_text(workspace, word).evaluate()
        report = Report("apply")
        if element:
            image = apply(psi, read_element(workspace, element))
            report.add(str(image))
            report.data = {"image": str(image), "text": image.to_text()}
        else:
            image = lookup_ideal(workspace, ideal).image(psi)
            rows = [str(r) for r in image.groebner_basis()]
            report.add("<" + ", ".join(rows) + ">")
            report.data = {"groebner_basis": rows}
        return (report,)


NODE_CLASS_MAPPINGS = {
    "apply": Apply
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "apply": "Apply Automorphism"
}
