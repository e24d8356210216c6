import logging

from ..errors import PreconditionError
from ..ideals import compute_psi_I, find_seed
from ..report import Report
from .common import CATEGORY, WORKSPACE, factor_data, lookup_ideal, word_or_text

logger = logging.getLogger(__name__)


class Psi:
    """
    Canonical automorphism ψ_I carrying a monomial ideal I0 onto I.

    ``seed`` is any automorphism mapping I0 onto I (a word block name or an
    inline word); without it a seed is searched for first.
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
        }

    DESCRIPTION = "Computes ψ_I as a decreasing product of transvections."
    CATEGORY = CATEGORY
    RETURN_TYPES = ("REPORT",)
    RETURN_NAMES = ("report",)
    FUNCTION = "psi"

    def psi(self, workspace, i0, target, seed=""):
        I0 = lookup_ideal(workspace, i0)
        I = lookup_ideal(workspace, target)
        report = Report("psi")
        if seed:
            found = word_or_text(workspace, seed)
        else:
            search = find_seed(I0, I)
            logger.debug("[Psi] seed search: %s", search.reason)
            if not search.found:
                raise PreconditionError(f"psi: no seed maps {i0} to {target}: {search.reason}")
            found = search.seed
            report.add(f"seed: {search.reason}")

        product = compute_psi_I(I0, I, found)
        sequence = "[" + ",".join(str(f) for f in product.factors) + "]"
        report.add(f"psi_I = {product}")
        report.add(f"sequence: {sequence}")
        report.add(f"word: {product.as_word().to_text() or 'id'}")
        report.data = {"sequence": [factor_data(f) for f in product.factors]}
        return (report,)


NODE_CLASS_MAPPINGS = {
    "psi": Psi
}

NODE_DISPLAY_NAME_MAPPINGS = {
    "psi": "Canonical Automorphism"
}
