"""Concrete syntax tree nodes.

Every token of the source appears in the tree: named nodes correspond
to grammar rules (function_definition, list, ...), anonymous nodes are
keywords and punctuation. Queries traverse named nodes only, but the
anonymous layer keeps node text faithful to the source.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Callable, Iterator


class LineIndex:
    """Maps character offsets in a source string to 1-based lines."""

    def __init__(self, source: str):
        self.source = source
        starts = [0]
        pos = source.find("\n")
        while pos != -1:
            starts.append(pos + 1)
            pos = source.find("\n", pos + 1)
        self._starts = starts

    def line_of(self, offset: int) -> int:
        return bisect_right(self._starts, offset)


class CstNode:
    """One node of a concrete syntax tree.

    Offsets are character offsets into the decoded source; `text`
    re-encodes the slice, which round-trips exactly for UTF-8 input.
    """

    __slots__ = ("type_name", "start", "end", "children", "parent", "is_named", "_index")

    def __init__(self, type_name: str, start: int, end: int, is_named: bool = True):
        self.type_name = type_name
        self.start = start
        self.end = end
        self.children: list[CstNode] = []
        self.parent: CstNode | None = None
        self.is_named = is_named
        self._index: LineIndex | None = None

    @classmethod
    def wrap(cls, type_name: str, children: list["CstNode"], is_named: bool = True) -> "CstNode":
        """A node spanning the given (non-empty) children."""
        node = cls(type_name, children[0].start, children[0].end, is_named)
        node.adopt_all(children)
        return node

    def adopt(self, child: "CstNode") -> None:
        child.parent = self
        self.children.append(child)
        if child.start < self.start:
            self.start = child.start
        if child.end > self.end:
            self.end = child.end

    def adopt_all(self, children) -> None:
        for child in children:
            self.adopt(child)

    def bind(self, index: LineIndex) -> "CstNode":
        """Attach the line index to this subtree (done once per file)."""
        stack = [self]
        while stack:
            node = stack.pop()
            node._index = index
            stack.extend(node.children)
        return self

    @property
    def start_line(self) -> int:
        return self._index.line_of(self.start)

    @property
    def end_line(self) -> int:
        return self._index.line_of(max(self.start, self.end - 1))

    @property
    def span_lines(self) -> int:
        return self.end_line - self.start_line + 1

    @property
    def text(self) -> bytes:
        return self._index.source[self.start : self.end].encode("utf-8")

    @property
    def named_children(self) -> list["CstNode"]:
        return [c for c in self.children if c.is_named]

    def walk(self) -> Iterator["CstNode"]:
        """Pre-order traversal of the whole subtree, this node included."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def walk_named(self) -> Iterator["CstNode"]:
        for node in self.walk():
            if node.is_named:
                yield node

    def find(self, predicate: Callable[["CstNode"], bool]) -> list["CstNode"]:
        return [n for n in self.walk_named() if predicate(n)]

    def child_by_type(self, type_name: str) -> "CstNode | None":
        for child in self.children:
            if child.type_name == type_name:
                return child
        return None

    @property
    def has_error(self) -> bool:
        return any(n.type_name == "ERROR" for n in self.walk())

    def __repr__(self):
        return f"<CstNode {self.type_name} [{self.start}:{self.end}] children={len(self.children)}>"

    def pretty(self, indent: int = 0, max_depth: int = 30) -> str:
        """Debug rendering of the named subtree."""
        pad = "  " * indent
        line = f"{pad}{self.type_name} [{self.start_line}-{self.end_line}]"
        if indent >= max_depth:
            return line + " ..."
        parts = [line]
        for child in self.children:
            if child.is_named:
                parts.append(child.pretty(indent + 1, max_depth))
        return "\n".join(parts)
