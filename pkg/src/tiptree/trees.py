"""Plane trees and labelled plane trees with canonical text encodings.

A plane tree is a rooted tree whose children are linearly ordered.  The
canonical encoding of a shape is its balanced-parenthesis word: a vertex is
written as ``"("`` followed by the encodings of its children followed by
``")"``, so the single vertex is ``"()"`` and a root with two leaf children
is ``"(()())"``.

A labelled plane tree additionally carries one distinct label per vertex.
Its canonical encoding is label-prefixed with comma-separated children, for
example ``"1(2,3(4))"``.  A label is a positive integer, optionally marked;
marked labels render with a trailing asterisk (``"5*"``).

Vertex identifiers are assigned in depth-first preorder at construction
time (the root is always ``0``), which keeps correspondence reporting
deterministic across parse / serialize round trips.

A plane tree is *tip-augmented* when the leftmost child of every interior
vertex is a leaf; the single vertex counts as tip-augmented.  All values in
this module are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .errors import (
    DuplicateLabelError,
    EmptyInputError,
    IllegalCharacterError,
    LabelSyntaxError,
    UnbalancedParensError,
)

# A shape is a nested tuple: every vertex is the tuple of its child shapes.
Nested = tuple

# A labelled node is (label, tuple of labelled child nodes).
LNode = tuple


@dataclass(frozen=True)
class Label:
    """A vertex label: positive integer value plus a marked flag."""

    value: int
    marked: bool = False

    def __str__(self) -> str:
        return f"{self.value}*" if self.marked else str(self.value)

    def sort_key(self) -> tuple[int, bool]:
        return (self.value, self.marked)


class PlaneTree:
    """An immutable plane tree with preorder vertex identifiers."""

    __slots__ = ("_nested", "_word", "_children", "_parents", "_subtrees")

    def __init__(self, nested: Nested):
        _check_nested(nested)
        self._nested = nested
        children: list[tuple[int, ...]] = []
        parents: list[Optional[int]] = []
        subtrees: list[Nested] = []

        def walk(node: Nested, parent: Optional[int]) -> int:
            vid = len(parents)
            parents.append(parent)
            children.append(())
            subtrees.append(node)
            children[vid] = tuple(walk(child, vid) for child in node)
            return vid

        walk(nested, None)
        self._children = tuple(children)
        self._parents = tuple(parents)
        self._subtrees = tuple(subtrees)
        self._word = _word_of(nested)

    # --- construction -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "PlaneTree":
        """Parse a balanced-parenthesis word (whitespace is insignificant)."""
        return cls(_parse_word(text))

    # --- basic views ---------------------------------------------------------

    @property
    def nested(self) -> Nested:
        return self._nested

    @property
    def word(self) -> str:
        """The canonical parenthesis encoding."""
        return self._word

    @property
    def root(self) -> int:
        return 0

    @property
    def vertex_count(self) -> int:
        return len(self._parents)

    @property
    def edge_count(self) -> int:
        return len(self._parents) - 1

    def vertices(self) -> range:
        return range(len(self._parents))

    def children_of(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def parent_of(self, v: int) -> Optional[int]:
        return self._parents[v]

    def is_leaf(self, v: int) -> bool:
        return not self._children[v]

    def subtree(self, v: int) -> "PlaneTree":
        """The plane tree rooted at vertex ``v``."""
        return PlaneTree(self._subtrees[v])

    def subtree_edges(self, v: int) -> int:
        """Edge count of the subtree rooted at ``v``."""
        return len(_word_of(self._subtrees[v])) // 2 - 1

    def leaves(self) -> Iterator[int]:
        return (v for v in self.vertices() if not self._children[v])

    # --- value semantics ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlaneTree) and self._word == other._word

    def __hash__(self) -> int:
        return hash(self._word)

    def __repr__(self) -> str:
        return f"PlaneTree({self._word!r})"

    def __str__(self) -> str:
        return self._word


class LabelledPlaneTree:
    """A plane tree plus one distinct label per vertex (preorder indexed)."""

    __slots__ = ("shape", "labels")

    def __init__(self, shape: PlaneTree, labels: tuple[Label, ...]):
        if len(labels) != shape.vertex_count:
            raise ValueError(
                f"{len(labels)} labels for {shape.vertex_count} vertices"
            )
        seen = set()
        for lab in labels:
            key = (lab.value, lab.marked)
            if key in seen:
                raise DuplicateLabelError(f"label {lab} used twice")
            seen.add(key)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "labels", tuple(labels))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LabelledPlaneTree is immutable")

    # --- construction -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "LabelledPlaneTree":
        """Parse the label-prefixed grammar, e.g. ``"1(2,3(4))"``."""
        node = _parse_labelled(text)
        return cls.from_node(node)

    @classmethod
    def from_node(cls, node: LNode) -> "LabelledPlaneTree":
        shape_nested, labels = _flatten_node(node)
        return cls(PlaneTree(shape_nested), labels)

    # --- views ---------------------------------------------------------------

    @property
    def node(self) -> LNode:
        """The tree as nested ``(label, children)`` tuples."""
        return _build_node(self.shape, self.labels, self.shape.root)

    def label_of(self, v: int) -> Label:
        return self.labels[v]

    def label_values(self) -> frozenset[tuple[int, bool]]:
        return frozenset((lab.value, lab.marked) for lab in self.labels)

    @property
    def word(self) -> str:
        """The canonical labelled encoding."""
        return _word_of_node(self.node)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabelledPlaneTree)
            and self.shape == other.shape
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.labels))

    def __repr__(self) -> str:
        return f"LabelledPlaneTree({self.word!r})"

    def __str__(self) -> str:
        return self.word


# --- module-level operations -------------------------------------------------

def parse_tree(text: str) -> PlaneTree:
    """Parse a balanced-parenthesis word into a plane tree."""
    return PlaneTree.parse(text)


def serialize_tree(t: PlaneTree) -> str:
    """Canonical parenthesis encoding; inverse of :func:`parse_tree`."""
    return t.word


def parse_labelled(text: str) -> LabelledPlaneTree:
    """Parse the labelled grammar ``label["(" child ("," child)* ")"]``."""
    return LabelledPlaneTree.parse(text)


def serialize_labelled(t: LabelledPlaneTree) -> str:
    """Canonical labelled encoding; inverse of :func:`parse_labelled`."""
    return t.word


def is_tip_augmented(t: PlaneTree) -> bool:
    """True iff every interior vertex's first child is a leaf.

    Vacuously true for the single-vertex tree.  The property is hereditary:
    every subtree of a tip-augmented tree is itself tip-augmented.
    """
    for v in t.vertices():
        kids = t.children_of(v)
        if kids and t.children_of(kids[0]):
            return False
    return True


# --- internal helpers ----------------------------------------------------------

def _check_nested(node: object) -> None:
    if not isinstance(node, tuple):
        raise TypeError(f"shape nodes must be tuples, got {type(node).__name__}")
    for child in node:
        _check_nested(child)


def _word_of(node: Nested) -> str:
    return "(" + "".join(_word_of(child) for child in node) + ")"


def _parse_word(text: str) -> Nested:
    stripped = "".join(text.split())
    if not stripped:
        raise EmptyInputError("no tree in input")
    bad = set(stripped) - {"(", ")"}
    if bad:
        raise IllegalCharacterError(f"unexpected character {sorted(bad)[0]!r}")
    stack: list[list[Nested]] = [[]]
    for ch in stripped:
        if ch == "(":
            stack.append([])
        else:
            if len(stack) == 1:
                raise UnbalancedParensError("unmatched ')'")
            done = tuple(stack.pop())
            stack[-1].append(done)
    if len(stack) != 1:
        raise UnbalancedParensError("unmatched '('")
    if len(stack[0]) != 1:
        raise UnbalancedParensError("input is not a single tree")
    return stack[0][0]


def _parse_labelled(text: str) -> LNode:
    s = "".join(text.split())
    if not s:
        raise EmptyInputError("no tree in input")
    pos = 0

    def parse_label() -> Label:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise LabelSyntaxError(f"expected a label at position {start}")
        value = int(s[start:pos])
        if value < 1:
            raise LabelSyntaxError(f"label must be positive, got {value}")
        marked = False
        if pos < len(s) and s[pos] == "*":
            marked = True
            pos += 1
        return Label(value, marked)

    def parse_node() -> LNode:
        nonlocal pos
        label = parse_label()
        children: list[LNode] = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            children.append(parse_node())
            while pos < len(s) and s[pos] == ",":
                pos += 1
                children.append(parse_node())
            if pos >= len(s) or s[pos] != ")":
                raise LabelSyntaxError(f"expected ')' at position {pos}")
            pos += 1
        return (label, tuple(children))

    node = parse_node()
    if pos != len(s):
        raise LabelSyntaxError(f"trailing input at position {pos}")
    return node


def _flatten_node(node: LNode) -> tuple[Nested, tuple[Label, ...]]:
    labels: list[Label] = []

    def walk(n: LNode) -> Nested:
        label, children = n
        labels.append(label)
        return tuple(walk(child) for child in children)

    nested = walk(node)
    return nested, tuple(labels)


def _build_node(shape: PlaneTree, labels: tuple[Label, ...], v: int) -> LNode:
    return (
        labels[v],
        tuple(_build_node(shape, labels, c) for c in shape.children_of(v)),
    )


def _word_of_node(node: LNode) -> str:
    label, children = node
    if not children:
        return str(label)
    return str(label) + "(" + ",".join(_word_of_node(c) for c in children) + ")"


TreeLike = Union[PlaneTree, LabelledPlaneTree]
