"""The recursive shape involution and the four-class taxonomy behind it.

A tip-augmented plane tree with at least two edges falls into exactly one
of four classes, driven by the subtree hanging off the second child of the
root and by the singleton-parents among the root's children (a
singleton-parent is a child whose subtree has exactly one edge):

* A1: the second child is a leaf and no child is a singleton-parent;
* A2: the second child is the only singleton-parent;
* B1: the second child's subtree has two or more edges and no child is a
  singleton-parent;
* B2: some child in position three or later is a singleton-parent.

``phi`` fixes trees with at most two edges and otherwise recurses by class.
In classes A1/A2 the first two subtrees stay put and the recursion runs
over the remaining subtrees.  Class B1, where the first child ``w`` is an
elder non-twin leaf and the second child ``u`` roots a subtree ``A`` with
two or more edges, maps to class B2: the image of ``A`` is re-rooted at the
root, ``u`` is re-attached after it carrying a single fresh leaf ``v``, and
the trailing subtrees recurse in place.  Class B2 applies the exact inverse.
The map is an involution that exchanges the singleton and elder non-twin
counts while preserving elder twin, second and younger leaves.

``phi_with_correspondence`` transports labels along the same recursion: in
A2 the labels of ``w`` (first child) and ``v`` (the singleton under the
second child) swap; in B1 the deleted leaf ``w``'s label lands on the
created leaf ``v``, and conversely in B2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotTipAugmentedError, TooSmallError
from .leaf_stats import stats
from .trees import LabelledPlaneTree, Nested, PlaneTree, is_tip_augmented


class TreeClass(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    B1 = "B1"
    B2 = "B2"


@dataclass(frozen=True)
class ClassView:
    """A tree's class plus the anatomy the involution works with.

    Vertex fields are preorder identifiers.  ``u`` is the distinguished
    singleton-parent (second child in A2, second child in B1 where it roots
    the big subtree, rightmost singleton-parent in B2, absent in A1) and
    ``v`` is the singleton leaf under it (A2/B2 only).  ``left_block`` holds
    the root-child subtrees forming the re-rooted part (the second child in
    B1, the children left of ``u`` in B2); ``trailing`` holds the root-child
    subtrees the recursion maps in place.
    """

    tree_class: TreeClass
    root: int
    first_child: int
    second_child: int
    u: Optional[int]
    v: Optional[int]
    left_block: tuple[int, ...]
    trailing: tuple[int, ...]


def _classify_counts(edge_counts: Sequence[int]) -> tuple[TreeClass, Optional[int]]:
    """Class and the position of ``u`` from the root children's edge counts."""
    single_positions = [p for p, e in enumerate(edge_counts) if e == 1]
    if single_positions and single_positions[-1] >= 2:
        return TreeClass.B2, single_positions[-1]
    if single_positions == [1]:
        return TreeClass.A2, 1
    if edge_counts[1] == 0:
        return TreeClass.A1, None
    return TreeClass.B1, 1


def _require_tip_augmented(t: PlaneTree) -> None:
    if not is_tip_augmented(t):
        raise NotTipAugmentedError(f"not tip-augmented: {t.word}")


def classify(t: PlaneTree) -> ClassView:
    """Classify a tip-augmented tree with at least two edges."""
    _require_tip_augmented(t)
    if t.edge_count < 2:
        raise TooSmallError("classification needs at least two edges")
    kids = t.children_of(t.root)
    counts = [t.subtree_edges(c) for c in kids]
    tree_class, u_pos = _classify_counts(counts)
    u = kids[u_pos] if u_pos is not None else None
    v = None
    if tree_class in (TreeClass.A2, TreeClass.B2):
        v = t.children_of(u)[0]
    if tree_class == TreeClass.B1:
        left_block: tuple[int, ...] = (kids[1],)
        trailing = kids[2:]
    elif tree_class == TreeClass.B2:
        left_block = kids[:u_pos]
        trailing = kids[u_pos + 1 :]
    else:
        left_block = ()
        trailing = kids[2:]
    return ClassView(
        tree_class=tree_class,
        root=t.root,
        first_child=kids[0],
        second_child=kids[1],
        u=u,
        v=v,
        left_block=left_block,
        trailing=trailing,
    )


# --- the involution on bare shapes ------------------------------------------

def _edges(shape: Nested) -> int:
    return sum(1 + _edges(child) for child in shape)


def _phi_shape(shape: Nested) -> Nested:
    if _edges(shape) <= 2:
        return shape
    counts = [_edges(child) for child in shape]
    tree_class, u_pos = _classify_counts(counts)
    if tree_class in (TreeClass.A1, TreeClass.A2):
        return shape[:2] + tuple(_phi_shape(c) for c in shape[2:])
    if tree_class == TreeClass.B1:
        image = _phi_shape(shape[1])
        # A tip-augmented tree with >= 2 edges has >= 2 root children, so
        # the re-attached singleton-parent lands in position >= 3.
        assert len(image) >= 2
        return image + (((),),) + tuple(_phi_shape(c) for c in shape[2:])
    # B2: undo the B1 construction.
    image = _phi_shape(shape[:u_pos])
    return ((), image) + tuple(_phi_shape(c) for c in shape[u_pos + 1 :])


def phi(t: PlaneTree) -> PlaneTree:
    """Apply the involution to a tip-augmented plane tree."""
    _require_tip_augmented(t)
    return PlaneTree(_phi_shape(t.nested))


# --- the involution with label transport -------------------------------------

def _edges_node(node) -> int:
    _, children = node
    return sum(1 + _edges_node(child) for child in children)


def _phi_node(node):
    label, kids = node
    if _edges_node(node) <= 2:
        return node
    counts = [_edges_node(child) for child in kids]
    tree_class, u_pos = _classify_counts(counts)
    if tree_class == TreeClass.A1:
        return (label, kids[:2] + tuple(_phi_node(c) for c in kids[2:]))
    if tree_class == TreeClass.A2:
        w_label = kids[0][0]
        u_label, u_kids = kids[1]
        v_label = u_kids[0][0]
        new_kids = (
            (v_label, ()),
            (u_label, ((w_label, ()),)),
        ) + tuple(_phi_node(c) for c in kids[2:])
        return (label, new_kids)
    if tree_class == TreeClass.B1:
        w_label = kids[0][0]
        image_label, image_kids = _phi_node(kids[1])
        new_kids = (
            image_kids
            + ((image_label, ((w_label, ()),)),)
            + tuple(_phi_node(c) for c in kids[2:])
        )
        return (label, new_kids)
    # B2
    u_label, u_kids = kids[u_pos]
    v_label = u_kids[0][0]
    image_label, image_kids = _phi_node((label, kids[:u_pos]))
    assert image_label == label
    new_kids = (
        ((v_label, ()),)
        + ((u_label, image_kids),)
        + tuple(_phi_node(c) for c in kids[u_pos + 1 :])
    )
    return (label, new_kids)


def phi_with_correspondence(t: LabelledPlaneTree) -> LabelledPlaneTree:
    """Apply the involution while transporting every vertex's label."""
    _require_tip_augmented(t.shape)
    result = LabelledPlaneTree.from_node(_phi_node(t.node))
    assert sorted(lab.value for lab in result.labels) == sorted(
        lab.value for lab in t.labels
    )
    return result


# --- the per-class counting identities ----------------------------------------

@dataclass(frozen=True)
class Prop1Report:
    """Direct vs class-recurrence counts of singleton / elder non-twin leaves."""

    tree_class: TreeClass
    i_direct: int
    k_direct: int
    i_recursive: int
    k_recursive: int

    @property
    def agrees(self) -> bool:
        return self.i_direct == self.i_recursive and self.k_direct == self.k_recursive


def _part_counts(part: PlaneTree) -> tuple[int, int]:
    if part.edge_count == 0:
        return (0, 0)
    vec = stats(part)
    return (vec.i, vec.k)


def check_prop1(t: PlaneTree) -> Prop1Report:
    """Recompute i and k from the class recurrence and compare with stats.

    A1 sums over the trailing subtrees; A2 adds one to both counts; B1 adds
    one elder non-twin (the first child); B2 adds one singleton (the leaf
    under the rightmost singleton-parent), summing over the re-rooted block
    and the trailing subtrees in both B cases.
    """
    view = classify(t)
    direct = stats(t)
    parts: list[PlaneTree] = []
    if view.tree_class == TreeClass.B2:
        block = tuple(t.subtree(c).nested for c in view.left_block)
        parts.append(PlaneTree(block))
    elif view.tree_class == TreeClass.B1:
        parts.append(t.subtree(view.second_child))
    parts.extend(t.subtree(c) for c in view.trailing)
    i_extra = {TreeClass.A1: 0, TreeClass.A2: 1, TreeClass.B1: 0, TreeClass.B2: 1}
    k_extra = {TreeClass.A1: 0, TreeClass.A2: 1, TreeClass.B1: 1, TreeClass.B2: 0}
    i_rec = i_extra[view.tree_class]
    k_rec = k_extra[view.tree_class]
    for part in parts:
        pi, pk = _part_counts(part)
        i_rec += pi
        k_rec += pk
    return Prop1Report(
        tree_class=view.tree_class,
        i_direct=direct.i,
        k_direct=direct.k,
        i_recursive=i_rec,
        k_recursive=k_rec,
    )
