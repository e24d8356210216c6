"""Finitely presented groups on named generators.

Words are tuples of nonzero ints: ``k`` stands for generator ``k - 1`` and
``-k`` for its inverse.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

logger = logging.getLogger(__name__)


def reduce_word(word):
    stack = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert_word(word):
    return tuple(-x for x in reversed(word))


def cyclic_reduce(word):
    word = reduce_word(word)
    while len(word) > 1 and word[0] == -word[-1]:
        word = word[1:-1]
    return word


def canonical_relators(words):
    """Cyclically reduced, trivial ones dropped, one representative per word/inverse pair."""
    seen = set()
    out = []
    for w in words:
        w = cyclic_reduce(w)
        if not w:
            continue
        c = min(w, invert_word(w))
        if c not in seen:
            seen.add(c)
            out.append(c)
    return tuple(sorted(out, key=lambda w: (len(w), w)))


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple
    basepoint: str = ""
    exhausted: bool = False

    @property
    def is_free_certified(self):
        return not self.relators and not self.exhausted

    def word_text(self, word):
        if not word:
            return "1"
        return " ".join(self.generators[abs(x) - 1] + ("" if x > 0 else "^-1") for x in word)

    def relator_texts(self):
        return [self.word_text(r) for r in self.relators]

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(self.relator_texts())
        return f"< {gens} | {rels} >"


def abelian_invariants(p):
    n = len(p.generators)
    if n == 0:
        return AbelianInvariants(0, ())
    if not p.relators:
        return AbelianInvariants(n, ())

    exponents = np.zeros((len(p.relators), n), dtype=np.int64)
    for i, word in enumerate(p.relators):
        for x in word:
            exponents[i, abs(x) - 1] += 1 if x > 0 else -1

    snf = smith_normal_form(sympy.Matrix(exponents.tolist()), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    rank = sum(1 for d in diagonal if d != 0)
    torsion = tuple(sorted(d for d in diagonal if d > 1))
    return AbelianInvariants(n - rank, torsion)


def _substitute(word, index, replacement):
    out = []
    for x in word:
        if x == index:
            out.extend(replacement)
        elif x == -index:
            out.extend(invert_word(replacement))
        else:
            out.append(x)
    return reduce_word(out)


def _renumber(word, removed):
    return tuple(x - (1 if x > 0 else -1) if abs(x) > removed else x for x in word)


def _elimination(relators):
    """First ``(relator index, generator, position)`` with a generator occurring once."""
    order = sorted(range(len(relators)), key=lambda i: (len(relators[i]), i))
    for i in order:
        word = relators[i]
        counts = {}
        for x in word:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        singles = sorted(g for g, c in counts.items() if c == 1)
        if singles:
            g = singles[0]
            pos = next(k for k, x in enumerate(word) if abs(x) == g)
            return i, g, pos
    return None


def simplify_presentation(p, budget=64):
    """Tietze eliminations: a relator ``A g^±1 B`` with ``g`` occurring once removes ``g``."""
    generators = list(p.generators)
    relators = list(canonical_relators(p.relators))
    steps = 0
    while True:
        found = _elimination(relators)
        if found is None:
            break
        if steps >= budget:
            logger.debug("[Groups] Tietze budget of %d steps exhausted", budget)
            return GroupPresentation(tuple(generators), canonical_relators(relators), p.basepoint, True)
        i, g, pos = found
        word = relators.pop(i)
        head, letter, tail = word[:pos], word[pos], word[pos + 1:]
        if letter > 0:
            value = reduce_word(invert_word(head) + invert_word(tail))
        else:
            value = reduce_word(tail + head)
        logger.debug("[Groups] eliminating %s", generators[g - 1])
        relators = [_renumber(_substitute(r, g, value), g) for r in relators]
        relators = list(canonical_relators(relators))
        del generators[g - 1]
        steps += 1
    return replace(p, generators=tuple(generators), relators=tuple(relators), exhausted=False)
