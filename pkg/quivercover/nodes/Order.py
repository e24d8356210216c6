from ..order import order_of
from ..report import Report
from .common import CATEGORY, WORKSPACE, path_text


class Order:
    """
    Prints the bypasses of the quiver in increasing order.

    With ``left`` and ``right`` (paths in traversal order, e.g. "c e f g")
    it also compares the two paths.
    """

    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
            },
            "optional": {
                "left": ("STRING", {"default": ""}),
                "right": ("STRING", {"default": ""}),
            },
        }

    DESCRIPTION = "Total order on bypasses and paths of a quiver without multiple arrows."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "order"

    def order(self, workspace, left="", right=""):
        q = workspace.quiver
        q.require_simple("order")
        order = order_of(q)
        ranked = order.sorted_bypasses()
        report = Report("order")
        report.add("<".join(str(b) for b in ranked))
        report.data = {"bypasses": [str(b) for b in ranked]}

        if left and right:
            u, v = q.path(left), q.path(right)
            sign = order.compare_paths(u, v)
            symbol = {-1: "<", 0: "=", 1: ">"}[sign]
            report.add(f"{path_text(u)} {symbol} {path_text(v)}")
            report.data["compare"] = sign
        return (report,)


NODE_CLASS_MAPPINGS = {
    "order": Order
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "order": "Bypass Order"
}
