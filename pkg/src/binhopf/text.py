"""Text grammar for trees and forests.

    tree   := label | "(" tree SP tree ")"
    label  := [A-Za-z0-9_]+ | "*"
    forest := tree { "," SP? tree } | "1"

Parsing is whitespace tolerant; printing is canonical (see ``str(Tree)`` and
``str(Forest)``). A bare ``1`` in forest position is the empty forest.
"""
from __future__ import annotations

from binhopf._backend import kernels
from binhopf._table import TABLE
from binhopf.errors import ParseError
from binhopf.trees import Forest, Tree

_LABEL_CHARS = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_")


class _Reader:
    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip_ws(self):
        text = self.text
        while self.pos < len(text) and text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def tree(self) -> int:
        self.skip_ws()
        c = self.peek()
        if c == "(":
            self.pos += 1
            a = self.tree()
            start = self.pos
            self.skip_ws()
            if self.pos == start:
                self.fail("expected space between subtrees")
            b = self.tree()
            self.skip_ws()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return kernels.intern_node(TABLE, a, b)
        if c == "*":
            self.pos += 1
            return kernels.intern_leaf(TABLE, "*")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _LABEL_CHARS:
            self.pos += 1
        if self.pos == start:
            self.fail("expected a label or '('" if c else "unexpected end of input")
        return kernels.intern_leaf(TABLE, self.text[start:self.pos])

    def forest(self) -> tuple[int, ...]:
        ids = [self.tree()]
        if TABLE.label[ids[0]] == "1":
            save = self.pos
            self.skip_ws()
            is_unit = self.peek() != ","
            self.pos = save
            if is_unit:
                return ()
        while True:
            save = self.pos
            self.skip_ws()
            if self.peek() != ",":
                self.pos = save
                break
            self.pos += 1
            ids.append(self.tree())
        return tuple(sorted(ids))

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")


def parse_tree(text: str) -> Tree:
    r = _Reader(text)
    t = r.tree()
    r.end()
    return Tree._of(t)


def parse_forest(text: str) -> Forest:
    r = _Reader(text)
    ids = r.forest()
    r.end()
    return Forest.from_ids(ids)
