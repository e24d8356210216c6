import logging

from ..errors import PreconditionError, StageError
from ..gamma import certify_universal
from ..ideals import find_seed
from ..report import Report
from .common import CATEGORY, SETTINGS_INPUT, WORKSPACE, factor_data, lookup_ideal, settings_or_default, word_or_text

logger = logging.getLogger(__name__)


class Certify:
    """
    Certificate that the monomial presentation I0 covers the presentation I:
    ψ_I, its realized path in Γ, and the surjection of fundamental groups
    with the relators of its kernel.
    """

    @classmethod
    def INPUT_TYPES(cls):
        return {
            "required": {
                "workspace": WORKSPACE,
                "i0": ("IDEAL",),
                "target": ("IDEAL",),
            },
            "optional": {
                "seed": ("WORD", {"default": ""}),
            },
            "hidden": SETTINGS_INPUT,
        }

    DESCRIPTION = "Checks the universal cover certificate for a pair of presentations."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "certify"

    def certify(self, workspace, i0, target, seed="", settings=None):
        settings = settings_or_default(settings)
        I0 = lookup_ideal(workspace, i0)
        I = lookup_ideal(workspace, target)
        if seed:
            found = word_or_text(workspace, seed)
        else:
            search = find_seed(I0, I)
            if not search.found:
                raise StageError("seed", PreconditionError(f"no seed maps {i0} to {target}: {search.reason}"))
            found = search.seed

        cert = certify_universal(I0, I, found, settings)
        logger.debug("[Certify] %d realization steps", len(cert.path.steps))

        report = Report("certify")
        report.add(f"psi_I = {cert.psi}")
        for step in cert.path.steps:
            report.add(f"  {step.factor}: {step.case.value}  {step.ideal}")
        report.add(f"path length in Γ: {cert.path.length}")
        report.add(f"source group: {cert.witness.source}")
        report.add(f"target group: {cert.witness.target}")
        report.add("kernel generated by: " + (", ".join(cert.kernel_texts) or "1"))
        report.add(f"target simplified: {cert.simplified_target}")
        report.add("certificate: ok")
        report.data = {
            "psi": [factor_data(f) for f in cert.psi.factors],
            "steps": [step.case.value for step in cert.path.steps],
            "path_length": cert.path.length,
            "kernel": cert.kernel_texts,
            "target_simplified": {
                "generators": list(cert.simplified_target.generators),
                "relators": cert.simplified_target.relator_texts(),
            },
        }
        return (report,)


NODE_CLASS_MAPPINGS = {
    "certify": Certify
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "certify": "Universal Cover Certificate"
}
