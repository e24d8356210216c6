"""Exact linear combinations of parallel paths.

Coefficients are ``fractions.Fraction``; terms are kept in normal form
(merged, no zeros) and sorted descending under the path order, so the
leading path of a vector is its first term.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapacityError, ParseError, PathError
from .order import order_of
from .quiver import render


def to_scalar(v):
    """Exact scalar from an int, Fraction or ``p/q`` text. Floats are refused."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise PathError("scalar: booleans are not scalars")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        raise PathError(f"scalar: floating point value {v!r} is not allowed")
    return parse_scalar(str(v))


def parse_scalar(text):
    s = text.strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ParseError(f"invalid scalar {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid scalar {text!r}") from None


def format_scalar(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class PathVector:
    quiver: object = field(compare=False, hash=False, repr=False)
    source: str
    target: str
    terms: tuple = ()

    # ---------- construction ----------

    @classmethod
    def zero(cls, quiver, source, target):
        return cls(quiver, source, target, ())

    @classmethod
    def of_path(cls, quiver, path, coefficient=1):
        return normal_form(quiver, [(coefficient, path)], path.source, path.target)

    # ---------- reading ----------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def support(self):
        return tuple(p for p, _ in self.terms)

    @property
    def leading_path(self):
        if not self.terms:
            raise PathError("PathVector: zero vector has no leading path")
        return self.terms[0][0]

    @property
    def leading_coefficient(self):
        return self.terms[0][1] if self.terms else Fraction(0)

    @property
    def is_monomial(self):
        return len(self.terms) == 1

    def coefficient(self, path):
        for p, c in self.terms:
            if p == path:
                return c
        return Fraction(0)

    def as_dict(self):
        return dict(self.terms)

    def is_parallel(self, other):
        return self.source == other.source and self.target == other.target

    # ---------- arithmetic ----------

    def _check_parallel(self, other):
        if not self.is_parallel(other):
            raise PathError(
                f"PathVector: {self.source}->{self.target} and {other.source}->{other.target} are not parallel"
            )

    def __add__(self, other):
        self._check_parallel(other)
        return normal_form(self.quiver, list(_swap(self.terms)) + list(_swap(other.terms)), self.source, self.target)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PathVector(self.quiver, self.source, self.target, tuple((p, -c) for p, c in self.terms))

    def scale(self, c):
        c = to_scalar(c)
        if c == 0:
            return PathVector.zero(self.quiver, self.source, self.target)
        return PathVector(self.quiver, self.source, self.target, tuple((p, c * k) for p, k in self.terms))

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def then(self, other):
        return concatenate(self, other)

    def subexpressions(self, cap=20):
        return subexpressions(self, cap)

    # ---------- text ----------

    def to_text(self):
        """File syntax: ``1*(a h) + 1*(c e f g h)``."""
        if not self.terms:
            return "0"
        parts = []
        for i, (p, c) in enumerate(self.terms):
            body = f"{format_scalar(abs(c))}*({p})"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (p, c) in enumerate(self.terms):
            mag = abs(c)
            body = render(p) if mag == 1 else f"{format_scalar(mag)}·{render(p)}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _swap(terms):
    for p, c in terms:
        yield c, p


def normal_form(quiver, pairs, source=None, target=None):
    """Merge ``(scalar, path)`` pairs into a ``PathVector``.

    ``source``/``target`` are needed only when ``pairs`` is empty.
    """
    merged = {}
    for c, p in pairs:
        if source is None:
            source, target = p.source, p.target
        if p.source != source or p.target != target:
            raise PathError(f"normal_form: {p} is not parallel to {source}->{target}")
        merged[p] = merged.get(p, Fraction(0)) + to_scalar(c)
    if source is None:
        raise PathError("normal_form: empty term list needs endpoints")
    key = order_of(quiver).basis_key
    terms = tuple(sorted(((p, c) for p, c in merged.items() if c != 0), key=lambda t: key(t[0]), reverse=True))
    return PathVector(quiver, source, target, terms)


def coefficient(r, u):
    return r.coefficient(u)


def concatenate(r, s):
    """``r`` followed by ``s``; in composition notation this is ``s·r``."""
    if r.target != s.source:
        raise PathError(f"concatenate: {r.source}->{r.target} cannot be followed by {s.source}->{s.target}")
    pairs = [(c * k, p.then(q)) for p, c in r.terms for q, k in s.terms]
    return normal_form(r.quiver, pairs, r.source, s.target)


def subexpressions(r, cap=20):
    """Every subexpression of ``r`` (2^|supp r| of them), bitmask order over the sorted support."""
    n = len(r.terms)
    if n > cap:
        raise CapacityError(f"subexpressions: support of size {n} exceeds the cap {cap}")
    for mask in range(1 << n):
        chosen = tuple(t for i, t in enumerate(r.terms) if mask >> i & 1)
        yield PathVector(r.quiver, r.source, r.target, chosen)
