"""Parser for connected-sum expressions.

Grammar::

    Expr := Term ('#' Term)*
    Term := INT '*' Gen | Gen
    Gen  := 'K3' | 'SP(' INT ',' INT ')' | 'CP2' | '~CP2'
          | 'S1xS3' | 'S4' | '@' FILEPATH

Whitespace is insignificant.  '~CP2' is the orientation-reversed complex
projective plane, '@path' loads a JSON manifold descriptor.  Connected
sums associate to the left; all derived invariants are independent of the
association.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import ParseError, ValidationError
from .manifolds import (
    ManifoldData,
    connected_sum,
    cp2,
    cp2bar,
    k3,
    load_descriptor,
    s1xs3,
    s4,
    surface_product,
)

_SIMPLE_GENERATORS = ("K3", "CP2", "~CP2", "S1xS3", "S4")


@dataclass(frozen=True)
class GenToken:
    """One generator token: a named manifold, a surface product, or a file."""

    kind: str
    genera: tuple[int, int] | None = None
    path: str | None = None

    def __str__(self) -> str:
        if self.kind == "SP":
            return f"SP({self.genera[0]},{self.genera[1]})"
        if self.kind == "FILE":
            return f"@{self.path}"
        return self.kind


@dataclass(frozen=True)
class Term:
    count: int
    gen: GenToken

    def __str__(self) -> str:
        if self.count == 1:
            return str(self.gen)
        return f"{self.count}*{self.gen}"


@dataclass(frozen=True)
class ManifoldExpression:
    terms: tuple[Term, ...]

    def __str__(self) -> str:
        return " # ".join(str(t) for t in self.terms)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            raise ParseError(f"expected '{char}'", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def word(self) -> tuple[str, int]:
        """Longest run of identifier characters, with its start offset."""
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos], start

    def filepath(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and not (
            self.text[self.pos].isspace() or self.text[self.pos] == "#"
        ):
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a file path after '@'", start)
        return self.text[start : self.pos]


def parse(expr: str) -> ManifoldExpression:
    """Parse a connected-sum expression; raises ParseError with the byte
    offset on malformed input."""
    scanner = _Scanner(expr)
    terms = [_parse_term(scanner)]
    while not scanner.at_end():
        scanner.expect("#")
        terms.append(_parse_term(scanner))
    return ManifoldExpression(tuple(terms))


def _parse_term(scanner: _Scanner) -> Term:
    if scanner.at_end():
        raise ParseError("expected a generator", scanner.pos)
    if scanner.peek().isdigit():
        count = scanner.integer()
        if count < 1:
            raise ParseError("multiplicity must be positive", scanner.pos)
        scanner.expect("*")
        return Term(count, _parse_generator(scanner))
    return Term(1, _parse_generator(scanner))


def _parse_generator(scanner: _Scanner) -> GenToken:
    ch = scanner.peek()
    if ch == "@":
        scanner.expect("@")
        return GenToken("FILE", path=scanner.filepath())
    if ch == "~":
        scanner.expect("~")
        word, start = scanner.word()
        if word != "CP2":
            raise ParseError(f"unknown generator '~{word}'", start - 1)
        return GenToken("~CP2")
    word, start = scanner.word()
    if word == "SP":
        scanner.expect("(")
        g = scanner.integer()
        scanner.expect(",")
        gp = scanner.integer()
        scanner.expect(")")
        return GenToken("SP", genera=(g, gp))
    if word in _SIMPLE_GENERATORS:
        return GenToken(word)
    if not word:
        raise ParseError("expected a generator", start)
    raise ParseError(f"unknown generator '{word}'", start)


_BUILDERS = {
    "K3": k3,
    "CP2": cp2,
    "~CP2": cp2bar,
    "S1xS3": s1xs3,
    "S4": s4,
}


def build_generator(token: GenToken) -> ManifoldData:
    if token.kind == "SP":
        return surface_product(*token.genera)
    if token.kind == "FILE":
        return load_descriptor(token.path)
    return _BUILDERS[token.kind]()


def resolve(expr: ManifoldExpression) -> ManifoldData:
    """Expand multiplicities and fold the connected sum, left-associated."""
    pieces = []
    for term in expr.terms:
        built = build_generator(term.gen)
        pieces.extend([built] * term.count)
    if not pieces:
        raise ValidationError("empty manifold expression")
    return reduce(connected_sum, pieces)


def parse_manifold(expr: str) -> ManifoldData:
    return resolve(parse(expr))
