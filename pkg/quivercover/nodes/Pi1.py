from ..groups import abelian_invariants, simplify_presentation
from ..homotopy import homotopy_closure, pi1_presentation
from ..report import Report
from .common import CATEGORY, SETTINGS_INPUT, WORKSPACE, lookup_ideal, settings_or_default


class Pi1:
    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "ideal": ("IDEAL",),
            },
            "optional": {
                "basepoint": ("VERTEX", {"default": ""}),
                "simplify": ("BOOLEAN", {"default": False}),
            },
            "hidden": SETTINGS_INPUT,
        }

    DESCRIPTION = "Presentation and abelian invariants of the fundamental group of a bound quiver."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "pi1"

    def pi1(self, workspace, ideal, basepoint="", simplify=False, settings=None):
        settings = settings_or_default(settings)
        relation = homotopy_closure(lookup_ideal(workspace, ideal))
        p = pi1_presentation(relation, basepoint or None)
        invariants = abelian_invariants(p)

        report = Report("pi1")
        report.add(f"presentation: {p}")
        report.data = {
            "basepoint": p.basepoint,
            "generators": list(p.generators),
            "relators": p.relator_texts(),
        }
        if simplify:
            s = simplify_presentation(p, settings.tietze_budget)
            report.add(f"simplified: {s}")
            if s.exhausted:
                report.add("simplification budget exhausted")
            elif s.is_free_certified:
                report.add(f"free of rank {len(s.generators)}")
            report.data["simplified"] = {
                "generators": list(s.generators),
                "relators": s.relator_texts(),
                "exhausted": s.exhausted,
            }
        report.add(f"abelianization: {invariants}")
        report.data["abelian"] = {"free_rank": invariants.free_rank, "torsion": list(invariants.torsion)}
        return (report,)


NODE_CLASS_MAPPINGS = {
    "pi1": Pi1
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "pi1": "Fundamental Group"
}
