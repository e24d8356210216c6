from fractions import Fraction

import numpy as np
import pytest

from quivercover.automorphisms import DecreasingProduct, Factor, TransvectionWord
from quivercover.ideals import ideal_from_generators
from quivercover.order import order_of
from quivercover.quiver import Quiver
from quivercover.vectors import PathVector
from quivercover.workspace import parse, parse_element

SIX_VERTEX_TEXT = """\
# the running example
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
vertex 6
arrow c 1 2
arrow b 1 4
arrow a 1 5
arrow e 2 3
arrow d 2 4
arrow f 3 4
arrow g 4 5
arrow h 5 6

ideal I0
gen 1*(a h)
gen 1*(b g)
gen 1*(c d)

ideal I
gen 1*(a h) + 1*(c e f g h)
gen 1*(b g) + 1*(c e f g)
gen 1*(c d)

word psi
T a (c e f g) 1 ; T b (c e f) 1
"""

INTRO_TEXT = """\
vertex 1
vertex 2
vertex 3
vertex 4
arrow b 1 2
arrow c 2 3
arrow a 1 3
arrow d 3 4

ideal I0
gen 1*(a d)

ideal J
gen 1*(a d) - 1*(b c d)
"""

PARALLEL_TEXT = """\
vertex 1
vertex 2
vertex 3
arrow a 1 2
arrow b 1 2
arrow c 2 3

ideal I0
gen 1*(a c)

ideal I1
gen 1*(b c)

ideal J
gen 1*(a c) - 1*(b c)
"""

SCALARS = [Fraction(-2), Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3, 2)]


@pytest.fixture
def six():
    return parse(SIX_VERTEX_TEXT)


@pytest.fixture
def six_q(six):
    return six.quiver


@pytest.fixture
def intro():
    return parse(INTRO_TEXT)


@pytest.fixture
def intro_q(intro):
    return intro.quiver


@pytest.fixture
def parallel():
    return parse(PARALLEL_TEXT)


def vec(q, text):
    return parse_element(q, text)


# ---------- random instances ----------

def random_quiver(rng, max_vertices=5, max_arrows=7):
    """Connected quiver without oriented cycles or multiple arrows, random arrow order."""
    n = int(rng.integers(2, max_vertices + 1))
    pairs = set()
    for j in range(2, n + 1):
        pairs.add((int(rng.integers(1, j)), j))
    others = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) not in pairs]
    rng.shuffle(others)
    room = max(0, max_arrows - len(pairs))
    pairs.update(others[:int(rng.integers(0, min(room, len(others)) + 1))])

    arrows = [(f"x{k}", str(i), str(j)) for k, (i, j) in enumerate(sorted(pairs))]
    labels = [a[0] for a in arrows]
    order = [labels[k] for k in rng.permutation(len(labels))]
    return Quiver([str(v) for v in range(1, n + 1)], arrows, order)


def random_scalar(rng):
    return SCALARS[int(rng.integers(0, len(SCALARS)))]


def random_monomial_ideal(rng, q, max_generators=3):
    long_paths = [p for p in q.nontrivial_paths() if p.length >= 2]
    if not long_paths:
        return ideal_from_generators(q, [])
    k = int(rng.integers(1, max_generators + 1))
    chosen = [long_paths[int(i)] for i in rng.choice(len(long_paths), size=min(k, len(long_paths)), replace=False)]
    return ideal_from_generators(q, [PathVector.of_path(q, p) for p in chosen])


def random_word(rng, q, max_length=6):
    bypasses = q.bypasses()
    if not bypasses:
        return TransvectionWord(q, ())
    n = int(rng.integers(0, max_length + 1))
    factors = []
    for _ in range(n):
        b = bypasses[int(rng.integers(0, len(bypasses)))]
        factors.append(Factor(b.arrow, b.path, random_scalar(rng)))
    return TransvectionWord(q, tuple(factors))


def random_product(rng, q, density=0.5):
    chosen = [b for b in order_of(q).sorted_bypasses() if rng.random() < density]
    return DecreasingProduct(q, tuple(Factor(b.arrow, b.path, random_scalar(rng)) for b in chosen))


@pytest.fixture
def rng_for():
    return lambda seed: np.random.default_rng(seed)
