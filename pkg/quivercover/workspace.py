"""Line-based workspace files.

::

    # the quiver
    vertex 1
    vertex 2
    arrow a 1 2
    arroworder a ...
    # a named ideal, one generator per line
    ideal I0
    gen 1*(a h) + 1*(c e f g h)
    # a named transvection word, factors separated by ';'
    word psi
    T a (c e f g) 1 ; T b (c e f) 1

Paths are written in traversal order. Scalars are integers or ``p/q``.
"""

import logging
import re
from dataclasses import dataclass, field

from .automorphisms import Factor, TransvectionWord
from .errors import ParseError, QuiverCoverError, StructuralError
from .ideals import ideal_from_generators
from .quiver import Quiver
from .vectors import normal_form, parse_scalar

logger = logging.getLogger(__name__)

ORDER_DIRECTIVES = ("arroworder", "arrowoder")
_SCALAR = re.compile(r"\d+(?:/\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")


@dataclass
class WorkspaceFile:
    quiver: Quiver
    ideals: dict = field(default_factory=dict)
    words: dict = field(default_factory=dict)
    generators: dict = field(default_factory=dict)

    def ideal(self, name):
        return self.ideals[name]

    def word(self, name):
        return self.words[name]


# ---------- scanning ----------

class _Scanner:
    def __init__(self, text, line, offset):
        self.text = text
        self.line = line
        self.offset = offset
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.line, self.offset + self.pos + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def scalar(self):
        self.skip()
        m = _SCALAR.match(self.text, self.pos)
        if not m:
            self.error("expected a scalar")
        self.pos = m.end()
        if self.pos < len(self.text) and self.text[self.pos] in ".eE":
            self.error("floating point scalars are not allowed")
        return parse_scalar(m.group())

    def token(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and not self.text[self.pos].isspace() and self.text[self.pos] not in "();*+":
            self.pos += 1
        if start == self.pos:
            self.error("expected a name")
        return self.text[start:self.pos]

    def path(self, quiver):
        self.expect("(")
        start = self.pos
        end = self.text.find(")", start)
        if end < 0:
            self.error("unclosed '('")
        labels = self.text[start:end].split()
        try:
            path = quiver.path(*labels)
        except QuiverCoverError as exc:
            self.error(str(exc))
        self.pos = end + 1
        return path

    def done(self):
        return self.peek() == ""


def _element(quiver, scanner):
    pairs = []
    sign = 1
    first = True
    while True:
        ch = scanner.peek()
        if ch in "+-":
            scanner.pos += 1
            sign = 1 if ch == "+" else -1
        elif not first:
            scanner.error("expected '+' or '-'")
        ch = scanner.peek()
        if ch == "0" and first and scanner.text[scanner.pos:].strip() == "0":
            scanner.pos = len(scanner.text)
            return None
        coefficient = 1
        if ch.isdigit():
            coefficient = scanner.scalar()
            scanner.expect("*")
        pairs.append((sign * coefficient, scanner.path(quiver)))
        first = False
        sign = 1
        if scanner.done():
            break
    ends = {(p.source, p.target) for _, p in pairs}
    if len(ends) > 1:
        scanner.error("endpoint mismatch: terms are not parallel")
    return normal_form(quiver, pairs)


def parse_element(quiver, text, line=0, offset=0):
    scanner = _Scanner(text, line, offset)
    vec = _element(quiver, scanner)
    if vec is None:
        scanner.error("an element needs at least one path term")
    return vec


def _factors(quiver, scanner):
    factors = []
    while not scanner.done():
        if scanner.token() != "T":
            scanner.error("expected 'T'")
        arrow = scanner.token()
        if arrow not in quiver.rank:
            scanner.error(f"unknown arrow {arrow!r}")
        path = scanner.path(quiver)
        negative = scanner.peek() == "-"
        if negative:
            scanner.pos += 1
        scalar = scanner.scalar()
        if not quiver.is_bypass(arrow, path):
            scanner.error(f"({arrow}, {path}) is not a bypass")
        factors.append(Factor(arrow, path, -scalar if negative else scalar))
        if scanner.peek() == ";":
            scanner.pos += 1
    return factors


def parse_word(quiver, text, line=0, offset=0):
    return TransvectionWord(quiver, tuple(_factors(quiver, _Scanner(text, line, offset))))


# ---------- files ----------

def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            indent = len(body) - len(body.lstrip())
            yield number, indent, body.strip()


def _tokens(body, indent):
    return [(m.group(), indent + m.start() + 1) for m in re.finditer(r"\S+", body)]


def _check_order(order, labels):
    number, indent, tokens = order
    seen = set()
    for label, column in tokens:
        if label not in labels:
            raise ParseError(f"arrow order names unknown arrow {label!r}", number, column)
        if label in seen:
            raise ParseError(f"arrow order lists {label!r} twice", number, column)
        seen.add(label)
    missing = [label for label in labels if label not in seen]
    if missing:
        raise ParseError(f"arrow order misses {', '.join(missing)}", number, indent + 1)


def parse(text):
    vertices, arrows, order = [], [], None
    rest = []
    for number, indent, body in _lines(text):
        head, _, tail = body.partition(" ")
        args = tail.split()
        if head == "vertex":
            if len(args) != 1:
                raise ParseError("vertex takes one id", number, indent + 1)
            vertices.append(args[0])
        elif head == "arrow":
            if len(args) != 3:
                raise ParseError("arrow takes a label, a source and a target", number, indent + 1)
            arrows.append(tuple(args))
        elif head in ORDER_DIRECTIVES:
            if order is not None:
                raise ParseError("arrow order declared twice", number, indent + 1)
            order = (number, indent, _tokens(body, indent)[1:])
        else:
            rest.append((number, indent, head, tail, body))

    if not vertices:
        raise ParseError("missing quiver block", 1, 1)
    if order is not None:
        _check_order(order, [a[0] for a in arrows])
    try:
        quiver = Quiver(vertices, arrows, None if order is None else [label for label, _ in order[2]])
    except StructuralError as exc:
        raise ParseError(str(exc), 1, 1) from None

    ws = WorkspaceFile(quiver)
    opened = {}
    current = None
    for number, indent, head, tail, body in rest:
        column = indent + len(head) + 2
        if head in ("ideal", "word"):
            name = tail.strip()
            if not _NAME.match(name):
                raise ParseError(f"invalid block name {name!r}", number, column)
            if name in ws.generators or name in ws.words:
                raise ParseError(f"duplicate block name {name!r}", number, column)
            if head == "ideal":
                ws.generators[name] = []
                opened[name] = number
            else:
                ws.words[name] = TransvectionWord(quiver, ())
            current = (head, name)
        elif head == "gen":
            if current is None or current[0] != "ideal":
                raise ParseError("'gen' outside an ideal block", number, indent + 1)
            ws.generators[current[1]].append(parse_element(quiver, tail, number, column - 1))
        elif head == "T":
            if current is None or current[0] != "word":
                raise ParseError("transvection outside a word block", number, indent + 1)
            word = ws.words[current[1]]
            more = _factors(quiver, _Scanner(body, number, indent))
            ws.words[current[1]] = TransvectionWord(quiver, word.factors + tuple(more))
        else:
            raise ParseError(f"unknown directive {head!r}", number, indent + 1)

    for name, gens in ws.generators.items():
        try:
            ws.ideals[name] = ideal_from_generators(quiver, gens)
        except QuiverCoverError as exc:
            raise ParseError(f"ideal {name}: {exc}", opened[name], 1) from None
    logger.debug("[Workspace] %d ideals, %d words", len(ws.ideals), len(ws.words))
    return ws


def serialize(ws):
    q = ws.quiver
    lines = [f"vertex {v}" for v in q.vertices]
    lines += [f"arrow {a.label} {a.source} {a.target}" for a in q.arrows]
    if q.arrow_order != tuple(a.label for a in q.arrows):
        lines.append("arroworder " + " ".join(q.arrow_order))
    for name, gens in ws.generators.items():
        lines.append("")
        lines.append(f"ideal {name}")
        lines += [f"gen {g.to_text()}" for g in gens]
    for name, word in ws.words.items():
        lines.append("")
        lines.append(f"word {name}")
        if word.factors:
            lines.append(word.to_text())
    return "\n".join(lines) + "\n"


