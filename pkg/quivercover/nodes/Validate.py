from ..quiver import validate_quiver
from ..report import Report
from .common import CATEGORY, WORKSPACE, yes_no


class Validate:
    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
            }
        }

    DESCRIPTION = "Checks the quiver of a workspace: oriented cycles, multiple arrows, connectedness."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "validate"

    def validate(self, workspace):
        q = workspace.quiver
        flags = validate_quiver(q)
        report = Report("validate")
        report.add(f"vertices: {len(q.vertices)}")
        report.add(f"arrows: {len(q.arrows)}")
        report.add(f"acyclic: {yes_no(flags.acyclic)}")
        report.add(f"no_multiple_arrows: {yes_no(flags.no_multiple_arrows)}")
        report.add(f"connected: {yes_no(flags.connected)}")
        report.data = {
            "acyclic": flags.acyclic,
            "no_multiple_arrows": flags.no_multiple_arrows,
            "connected": flags.connected,
            "ideals": list(workspace.ideals),
            "words": list(workspace.words),
        }
        return (report,)


NODE_CLASS_MAPPINGS = {
    "validate": Validate
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "validate": "Validate Quiver"
}
