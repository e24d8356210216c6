from ..automorphisms import compose, decreasing_normal_form
from ..errors import TransvectionGroupError
from ..report import Report
from .common import CATEGORY, WORKSPACE, factor_data, substitution_lines, word_or_text


class Compose:
    """
    Composes two automorphisms given as transvection words (``left`` after
    ``right``) and prints the arrow images together with the decreasing
    product of transvections equal to the result.

    Each input is a word block name or an inline word such as
    "T a (c e f g) 1 ; T b (c e f) 1".
    """

    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "left": ("WORD",),
            },
            "optional": {
                "right": ("WORD", {"default": ""}),
            },
        }

    DESCRIPTION = "Composes transvection words and prints the decreasing normal form."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "compose"

    def compose(self, workspace, left, right=""):
        psi = word_or_text(workspace, left).evaluate()
        if right:
            psi = compose(psi, word_or_text(workspace, right).evaluate())

        report = Report("compose")
        report.add("images:")
        report.extend(substitution_lines(psi))
        report.data = {"images": {label: str(img) for label, img in psi.images}}
        try:
            product = decreasing_normal_form(psi)
        except TransvectionGroupError as e:
            report.add(f"not a product of transvections: {e}")
            report.data["normal_form"] = None
            return (report,)

        report.add(f"normal form: {product}")
        report.add("factors: " + " ".join(str(f) for f in product.factors))
        report.data["normal_form"] = [factor_data(f) for f in product.factors]
        return (report,)


NODE_CLASS_MAPPINGS = {
    "compose": Compose
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "compose": "Compose Automorphisms"
}
