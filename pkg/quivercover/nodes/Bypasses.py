from ..order import order_of
from ..report import Report
from .common import CATEGORY, WORKSPACE, path_text


class Bypasses:
    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
            },
            "optional": {
                "double": ("BOOLEAN", {"default": False}),
            },
        }

    DESCRIPTION = "Lists the bypass sets B(α) and the weights W(α); optionally the double bypasses."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "bypasses"

    def bypasses(self, workspace, double=False):
        q = workspace.quiver
        report = Report("bypasses")
        sets = {}
        for a in q.arrows:
            found = q.bypass_set(a.label)
            sets[a.label] = [path_text(b.path) for b in found]
            report.add(f"B({a.label}) = {{{', '.join(str(b) for b in found)}}}")

        if q.no_multiple_arrows:
            table = order_of(q).table
            report.add("W: " + " ".join(f"{a.label}={table[a.label]}" for a in q.arrows))

        report.data = {"bypasses": sets}
        if double:
            rows = []
            for d in q.double_bypasses():
                a, u, b, v = d.as_tuple()
                rows.append([a, path_text(u), b, path_text(v)])
                report.add(f"({a},{path_text(u)},{b},{path_text(v)})  u = {path_text(d.suffix)}·{b}·{path_text(d.prefix)}")
            report.data["double_bypasses"] = rows
        return (report,)


NODE_CLASS_MAPPINGS = {
    "bypasses": Bypasses
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "bypasses": "List Bypasses"
}
