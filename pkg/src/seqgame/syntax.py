"""S-expression text format for games and strategy profiles.

Grammar (whitespace separates items and may surround parentheses)::

    GAME    := IDENT | '(' IDENT GAME+ ')'
    PROFILE := IDENT | '(' IDENT CHILD+ ')'      exactly one CHILD is starred
    CHILD   := ['*'] PROFILE
    IDENT   := [A-Za-z0-9_]+

The head of a parenthesised form is the owning agent; a bare identifier is
an outcome.  Printing is canonical: single spaces, no trailing whitespace.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ChoiceCountError, EmptyNode, ParseError
from .game import Game, Leaf, Node
from .strategy import Profile, ProfileLeaf, ProfileNode, choose

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<ident>[A-Za-z0-9_]+)|(?P<lp>\()|(?P<rp>\))|(?P<star>\*)|(?P<bad>.)", re.S)


class Token(NamedTuple):
    kind: str  # ident, lp, rp, star, eof
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "ws":
            chunk = m.group()
            nl = chunk.count("\n")
            if nl:
                line += nl
                line_start = m.start() + chunk.rindex("\n") + 1
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", line, col)
        tokens.append(Token(kind, m.group(), line, col))
    tokens.append(Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_star: bool):
        self.tokens = tokenize(text)
        self.pos = 0
        self.allow_star = allow_star

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise ParseError(f"expected {what}, found {found}", tok.line, tok.column)
        self.pos += 1
        return tok

    def finish(self):
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.column)

    def tree(self):
        """Parse one item, returning ``("leaf", name)`` or ``("node", agent, [(starred, item)], token)``."""
        tok = self.peek()
        if tok.kind == "ident":
            self.pos += 1
            return ("leaf", tok.text)
        if tok.kind != "lp":
            self.take("lp", "an outcome or '('")
        self.pos += 1
        head = self.take("ident", "an agent name")
        kids = []
        while self.peek().kind != "rp":
            starred = False
            if self.peek().kind == "star":
                star = self.take("star", "'*'")
                if not self.allow_star:
                    raise ParseError("choice mark '*' is not allowed in a game", star.line, star.column)
                starred = True
            if self.peek().kind == "eof":
                self.take("rp", "')'")
            kids.append((starred, self.tree()))
        self.take("rp", "')'")
        if not kids:
            raise EmptyNode(f"node of agent {head.text} has no children", head.line, head.column)
        return ("node", head.text, kids, head)


def _to_game(item) -> Game:
    if item[0] == "leaf":
        return Leaf(item[1])
    _, agent, kids, _ = item
    games = [_to_game(k) for _, k in kids]
    return Node(agent, games[0], tuple(games[1:]))


def _to_profile(item) -> Profile:
    if item[0] == "leaf":
        return ProfileLeaf(item[1])
    _, agent, kids, head = item
    marks = [i for i, (starred, _) in enumerate(kids) if starred]
    if len(marks) != 1:
        raise ChoiceCountError(
            f"node of agent {agent} has {len(marks)} chosen children, expected exactly one",
            head.line, head.column,
        )
    return choose(agent, [_to_profile(k) for _, k in kids], marks[0])


def parse_game(text: str) -> Game:
    p = _Parser(text, allow_star=False)
    item = p.tree()
    p.finish()
    return _to_game(item)


def parse_profile(text: str) -> Profile:
    p = _Parser(text, allow_star=True)
    if p.peek().kind == "star":
        tok = p.peek()
        raise ParseError("the root of a profile cannot be starred", tok.line, tok.column)
    item = p.tree()
    p.finish()
    return _to_profile(item)


def format_game(g: Game) -> str:
    if isinstance(g, Leaf):
        return g.outcome
    return "(" + " ".join([g.owner, *(format_game(c) for c in g.children)]) + ")"


def format_profile(s: Profile) -> str:
    if isinstance(s, ProfileLeaf):
        return s.outcome
    parts = [s.owner]
    parts += [format_profile(c) for c in s.left]
    parts.append("*" + format_profile(s.chosen))
    parts += [format_profile(c) for c in s.right]
    return "(" + " ".join(parts) + ")"


def normalize(text: str) -> str:
    """Canonical spacing of a game or profile text, keeping any '*' marks."""
    out = []
    for tok in tokenize(text)[:-1]:
        if out and tok.kind in ("ident", "lp", "star") and out[-1] not in ("(", "*"):
            out.append(" ")
        out.append(tok.text)
    return "".join(out)
