"""Colored binary plane trees: traversals, insertion, factorization, enumeration.

Trees are stored positionally: a node is an index into a node list, and each
node records a color plus optional left/right child indices.  Isomorphism of
colored trees is decided through :func:`encode`, a canonical serialization
that is also the on-disk and CLI format.

Colors are nonnegative integers into an ambient index set; a tree also carries
a ``box_color``, the color of the external marker that rides along with every
tree (including the empty one).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Node:
    color: int
    left: int | None = None
    right: int | None = None


@dataclass(frozen=True)
class ColoredTree:
    """A binary plane tree with per-vertex colors and an external box color.

    Node identity is positional; two representations of the same colored tree
    may differ, so compare trees with :func:`encode`, not ``==``.
    """

    nodes: tuple[Node, ...]
    root: int | None
    box_color: int = 0

    @property
    def size(self) -> int:
        return len(self.nodes)

    def node(self, v: int) -> Node:
        return self.nodes[v]

    def validate(self) -> None:
        """Check the structural invariants; raises ValueError on violation."""
        n = len(self.nodes)
        if (self.root is None) != (n == 0):
            raise ValueError("root must be present exactly when the tree is nonempty")
        if n == 0:
            return
        seen = [False] * n
        stack = [self.root]
        count = 0
        while stack:
            v = stack.pop()
            if not 0 <= v < n:
                raise ValueError(f"child index {v} out of range")
            if seen[v]:
                raise ValueError(f"node {v} reached twice")
            seen[v] = True
            count += 1
            nd = self.nodes[v]
            if nd.left is not None:
                stack.append(nd.left)
            if nd.right is not None:
                stack.append(nd.right)
        if count != n:
            raise ValueError("unreachable nodes present")


EMPTY = ColoredTree((), None, 0)


@dataclass(frozen=True)
class LabeledTree:
    """A colored tree plus a standard decreasing labeling (labels 1..size)."""

    tree: ColoredTree
    labels: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.tree.size

    def label_of(self, v: int) -> int:
        return self.labels[v]

    def validate(self) -> None:
        t = self.tree
        t.validate()
        n = t.size
        if sorted(self.labels) != list(range(1, n + 1)):
            raise ValueError("labels must be a bijection onto 1..n")
        for v, nd in enumerate(t.nodes):
            for c in (nd.left, nd.right):
                if c is not None and self.labels[c] >= self.labels[v]:
                    raise ValueError("labeling is not decreasing")


# ---------------------------------------------------------------------------
# Traversals and the inorder/postorder machinery


def inorder(t: ColoredTree) -> list[int]:
    """Node ids in inorder (left subtree, vertex, right subtree)."""
    out: list[int] = []

    def walk(v: int | None) -> None:
        if v is None:
            return
        nd = t.nodes[v]
        walk(nd.left)
        out.append(v)
        walk(nd.right)

    walk(t.root)
    return out


def postorder(t: ColoredTree) -> list[int]:
    """Node ids in postorder (left subtree, right subtree, vertex)."""
    out: list[int] = []

    def walk(v: int | None) -> None:
        if v is None:
            return
        nd = t.nodes[v]
        walk(nd.left)
        walk(nd.right)
        out.append(v)

    walk(t.root)
    return out


def traversal_labeling(t: ColoredTree, kind: str) -> LabeledTree:
    """Standard labeling assigning 1..n in the requested traversal order.

    The postorder labeling is always decreasing (children precede parents in
    postorder), so the result of ``kind="postorder"`` is a valid LabeledTree;
    the inorder labeling generally is not decreasing and is returned unchecked.
    """
    if t.size == 0:
        raise ValueError("cannot label the empty tree")
    if kind == "inorder":
        order = inorder(t)
    elif kind == "postorder":
        order = postorder(t)
    else:
        raise ValueError(f"unknown traversal {kind!r}")
    labels = [0] * t.size
    for pos, v in enumerate(order, start=1):
        labels[v] = pos
    return LabeledTree(t, tuple(labels))


def parent_map(t: ColoredTree) -> list[int | None]:
    parents: list[int | None] = [None] * t.size
    for v, nd in enumerate(t.nodes):
        if nd.left is not None:
            parents[nd.left] = v
        if nd.right is not None:
            parents[nd.right] = v
    return parents


def alpha(lt: LabeledTree) -> tuple[int, ...]:
    """The permutation read off a labeled tree in inorder."""
    return tuple(lt.labels[v] for v in inorder(lt.tree))


def beta(lt: LabeledTree) -> tuple[int, ...]:
    """The permutation read off a labeled tree in postorder."""
    return tuple(lt.labels[v] for v in postorder(lt.tree))


def alpha_inverse(word: Sequence[int], colors: Sequence[int] | None = None,
                  box_color: int = 0) -> LabeledTree:
    """The unique decreasing labeled tree whose inorder reading is ``word``.

    The root sits at the position of the maximum; the construction recurses on
    the prefix and suffix.  Node ids come out in postorder.  ``colors``, when
    given, assigns ``colors[k-1]`` to the vertex labeled ``k``.
    """
    if len(word) == 0:
        raise ValueError("alpha_inverse needs a nonempty word")
    if len(set(word)) != len(word):
        raise ValueError("word entries must be distinct")
    nodes: list[Node] = []
    labels: list[int] = []

    def build(lo: int, hi: int) -> int | None:
        if lo > hi:
            return None
        m = lo
        for i in range(lo + 1, hi + 1):
            if word[i] > word[m]:
                m = i
        left = build(lo, m - 1)
        right = build(m + 1, hi)
        color = colors[word[m] - 1] if colors is not None else 0
        nodes.append(Node(color, left, right))
        labels.append(word[m])
        return len(nodes) - 1

    root = build(0, len(word) - 1)
    return LabeledTree(ColoredTree(tuple(nodes), root, box_color), tuple(labels))


def stack_sort(sigma: Sequence[int]) -> tuple[int, ...]:
    """One pass of the stack-sorting map: postorder reading of alpha_inverse."""
    return beta(alpha_inverse(sigma))


# ---------------------------------------------------------------------------
# Insertion and insertion factors


def insert(t1: ColoredTree, v: int, t2: ColoredTree) -> ColoredTree:
    """Graft ``t2`` onto ``t1`` at vertex ``v``.

    A new vertex ``v*`` takes over v's position, v hangs below it as a left
    child (keeping its own subtrees), and ``t2`` becomes the right subtree of
    ``v*``.  The new vertex takes ``t2``'s box color; the result keeps
    ``t1``'s box color.  Node ids: ``t1``'s ids are unchanged, ``v*`` gets id
    ``t1.size``, and ``t2``'s ids are shifted up by ``t1.size + 1``.
    """
    if t1.size == 0 or t2.size == 0:
        raise ValueError("insertion needs nonempty operands")
    if not 0 <= v < t1.size:
        raise ValueError(f"vertex {v} not in the host tree")
    n1 = t1.size
    v_star = n1
    offset = n1 + 1
    nodes: list[Node] = []
    for u, nd in enumerate(t1.nodes):
        left = v_star if nd.left == v else nd.left
        right = v_star if nd.right == v else nd.right
        # only the parent of v is rewired; v itself keeps its children
        if u == v:
            left, right = nd.left, nd.right
        nodes.append(Node(nd.color, left, right))
    nodes.append(Node(t2.box_color, v, t2.root + offset))
    for nd in t2.nodes:
        nodes.append(
            Node(
                nd.color,
                None if nd.left is None else nd.left + offset,
                None if nd.right is None else nd.right + offset,
            )
        )
    root = v_star if t1.root == v else t1.root
    return ColoredTree(tuple(nodes), root, t1.box_color)


BOX = -1  # sentinel for the external box in factor computations


def factor_blocks(t: ColoredTree) -> list[tuple[int, list[int]]]:
    """Group vertices by their governing two-child vertex.

    Returns ``(owner, members)`` pairs where ``owner`` is either ``BOX`` or a
    vertex with two children, and ``members`` lists the vertices mapped to it:
    the owner itself (for vertex owners) plus every vertex of the owner's
    right subtree not claimed by a deeper two-child vertex.  The box block
    comes first, then vertex owners by id.
    """
    if t.size == 0:
        raise ValueError("the empty tree has no factors")
    owner_of = [BOX] * t.size

    def walk(v: int, owner: int) -> None:
        nd = t.nodes[v]
        two = nd.left is not None and nd.right is not None
        owner_of[v] = v if two else owner
        if nd.left is not None:
            walk(nd.left, owner)
        if nd.right is not None:
            walk(nd.right, v if two else owner)

    walk(t.root, BOX)
    blocks: dict[int, list[int]] = {BOX: []}
    for v in range(t.size):
        blocks.setdefault(owner_of[v], []).append(v)
    result = [(BOX, blocks[BOX])]
    result.extend((v, blocks[v]) for v in sorted(blocks) if v != BOX)
    return result


def _branch_of_block(t: ColoredTree, owner: int, members: list[int],
                     parents: list[int | None]) -> tuple[ColoredTree, list[int]]:
    """Assemble the branch factor living on ``members`` minus the owner.

    Within the factor, a vertex's parent is its nearest ancestor in the same
    block, on the side of the subtree it came from.  Returns the branch and
    the list mapping new node ids to original vertex ids.
    """
    vertices = [u for u in members if u != owner]
    index = {u: i for i, u in enumerate(vertices)}
    member_set = set(vertices)
    links: list[tuple[int | None, str | None]] = [(None, None)] * len(vertices)
    for u in vertices:
        cur = u
        while True:
            p = parents[cur]
            if p is None:
                break
            side = "L" if t.nodes[p].left == cur else "R"
            if p in member_set:
                links[index[u]] = (index[p], side)
                break
            if p == owner:
                break
            cur = p
    lefts: list[int | None] = [None] * len(vertices)
    rights: list[int | None] = [None] * len(vertices)
    root = None
    for i, (p, side) in enumerate(links):
        if p is None:
            if root is not None:
                raise AssertionError("factor block is not connected")
            root = i
        elif side == "L":
            if lefts[p] is not None:
                raise AssertionError("factor is not a branch")
            lefts[p] = i
        else:
            if rights[p] is not None:
                raise AssertionError("factor is not a branch")
            rights[p] = i
    box = t.box_color if owner == BOX else t.nodes[owner].color
    nodes = tuple(
        Node(t.nodes[u].color, lefts[i], rights[i]) for i, u in enumerate(vertices)
    )
    return ColoredTree(nodes, root, box), vertices


def insertion_factors(t: ColoredTree) -> list[ColoredTree]:
    """The multiset of branches a tree factors into under iterated insertion.

    One factor per block of :func:`factor_blocks`; each factor's box color is
    the color of its governing vertex (the tree's box color for the box
    block).  The factor list order is deterministic; treat it as a multiset.
    """
    parents = parent_map(t)
    return [
        _branch_of_block(t, owner, members, parents)[0]
        for owner, members in factor_blocks(t)
    ]


def labeled_insertion_factors(lt: LabeledTree) -> list[LabeledTree]:
    """Insertion factors of a labeled tree, keeping the original labels.

    The labels of each factor are the restriction of the tree's labeling, not
    renormalized, so factors of distinct blocks carry disjoint label sets.
    """
    t = lt.tree
    parents = parent_map(t)
    out = []
    for owner, members in factor_blocks(t):
        branch, vertices = _branch_of_block(t, owner, members, parents)
        out.append(LabeledTree(branch, tuple(lt.labels[u] for u in vertices)))
    return out


def swing(t: ColoredTree, v: int) -> ColoredTree:
    """Flip the single child of ``v`` to the other side; an involution."""
    nd = t.nodes[v]
    if (nd.left is None) == (nd.right is None):
        raise ValueError("swing needs a vertex with exactly one child")
    flipped = Node(nd.color, nd.right, nd.left)
    nodes = t.nodes[:v] + (flipped,) + t.nodes[v + 1:]
    return ColoredTree(nodes, t.root, t.box_color)


def swing_labeled(lt: LabeledTree, v: int) -> LabeledTree:
    return LabeledTree(swing(lt.tree, v), lt.labels)


# ---------------------------------------------------------------------------
# Predicates and statistics


def is_branch(t: ColoredTree) -> bool:
    if t.size == 0:
        return False
    return all(nd.left is None or nd.right is None for nd in t.nodes)


def is_full(t: ColoredTree) -> bool:
    if t.size == 0:
        return False
    return all((nd.left is None) == (nd.right is None) for nd in t.nodes)


def is_motzkin(t: ColoredTree) -> bool:
    """Every vertex with a right child also has a left child."""
    if t.size == 0:
        return False
    return all(nd.right is None or nd.left is not None for nd in t.nodes)


def right_edges(t: ColoredTree) -> int:
    return sum(1 for nd in t.nodes if nd.right is not None)


def two_child_count(t: ColoredTree) -> int:
    return sum(1 for nd in t.nodes if nd.left is not None and nd.right is not None)


# ---------------------------------------------------------------------------
# Canonical encoding (also the CLI / on-disk format)


def encode(t: ColoredTree) -> str:
    """Canonical serialization ``boxcolor:(color L R)`` with ``.`` for gaps.

    Equal strings exactly characterize isomorphic colored trees.
    """

    def enc(v: int | None) -> str:
        if v is None:
            return "."
        nd = t.nodes[v]
        return f"({nd.color} {enc(nd.left)} {enc(nd.right)})"

    return f"{t.box_color}:{enc(t.root)}"


def encode_labeled(lt: LabeledTree) -> str:
    """Like :func:`encode` but each vertex prints ``color|label``."""

    def enc(v: int | None) -> str:
        if v is None:
            return "."
        nd = lt.tree.nodes[v]
        return f"({nd.color}|{lt.labels[v]} {enc(nd.left)} {enc(nd.right)})"

    return f"{lt.tree.box_color}:{enc(lt.tree.root)}"


def parse_tree(text: str) -> ColoredTree:
    """Parse the output of :func:`encode`."""
    text = text.strip()
    box_text, sep, body = text.partition(":")
    if not sep:
        raise ValueError(f"missing box color in {text!r}")
    box = int(box_text)
    nodes: list[Node] = []
    pos = 0

    def parse_node() -> int | None:
        nonlocal pos
        if pos < len(body) and body[pos] == ".":
            pos += 1
            return None
        if pos >= len(body) or body[pos] != "(":
            raise ValueError(f"expected '(' or '.' at offset {pos} of {body!r}")
        pos += 1
        end = pos
        while end < len(body) and body[end] not in " )":
            end += 1
        color = int(body[pos:end])
        pos = end + 1  # skip the space
        left = parse_node()
        pos += 1
        right = parse_node()
        if pos >= len(body) or body[pos] != ")":
            raise ValueError(f"expected ')' at offset {pos} of {body!r}")
        pos += 1
        nodes.append(Node(color, left, right))
        return len(nodes) - 1

    root = parse_node()
    if pos != len(body):
        raise ValueError(f"trailing input in {text!r}")
    return ColoredTree(tuple(nodes), root, box)


def multiset_key(trees: Sequence[ColoredTree]) -> tuple[str, ...]:
    """Order-free fingerprint of a collection of colored trees."""
    return tuple(sorted(encode(t) for t in trees))


def labeled_multiset_key(lts: Sequence[LabeledTree]) -> tuple[str, ...]:
    return tuple(sorted(encode_labeled(lt) for lt in lts))


# ---------------------------------------------------------------------------
# Deterministic enumeration
#
# Shapes of a given size are enumerated recursively in left-subtree-size-major
# order: sizes of the left subtree ascend, then left shapes vary, then right
# shapes.  Colored families fix each shape's coloring through its postorder.


def _shapes(n: int) -> list:
    if n == 0:
        return [None]
    out = []
    for k in range(n):
        for left in _shapes(k):
            for right in _shapes(n - 1 - k):
                out.append((left, right))
    return out


_shape_cache: dict[int, list] = {}


def shapes(n: int) -> list:
    """All binary tree shapes of size n as nested ``(left, right)`` tuples."""
    if n not in _shape_cache:
        _shape_cache[n] = _shapes(n)
    return _shape_cache[n]


def tree_from_shape(shape, postorder_colors: Sequence[int] | None = None,
                    box_color: int = 0) -> ColoredTree:
    """Materialize a shape, coloring vertices by their postorder position."""
    nodes: list[Node] = []

    def build(sh) -> int | None:
        if sh is None:
            return None
        left = build(sh[0])
        right = build(sh[1])
        nodes.append(Node(0, left, right))
        return len(nodes) - 1

    root = build(shape)
    if postorder_colors is not None:
        # nodes were appended in postorder, so position k has color k
        if len(postorder_colors) != len(nodes):
            raise ValueError("color word length must match the shape size")
        nodes = [
            Node(postorder_colors[i], nd.left, nd.right) for i, nd in enumerate(nodes)
        ]
    return ColoredTree(tuple(nodes), root, box_color)


def iter_bpt(n: int) -> Iterator[ColoredTree]:
    """All plain (single-color) trees of size n; there are Catalan(n) of them."""
    for sh in shapes(n):
        yield tree_from_shape(sh)


def iter_branches(n: int) -> Iterator[ColoredTree]:
    """All branches of size n (2^(n-1) of them), directions in L<R order.

    Direction words read from the root down; each vertex hangs its single
    child on the recorded side.
    """
    if n < 1:
        raise ValueError("branches are nonempty")
    for directions in itertools.product("LR", repeat=n - 1):
        yield branch_from_directions(directions)


def branch_from_directions(directions: Sequence[str],
                           colors_root_down: Sequence[int] | None = None,
                           box_color: int = 0) -> ColoredTree:
    """Build a branch from root-down direction choices (``L`` or ``R``).

    ``colors_root_down[i]`` colors the vertex at depth ``i``.  Node ids run
    from the bottom vertex (0) up to the root.
    """
    n = len(directions) + 1
    nodes: list[Node] = []
    below: int | None = None
    for depth in range(n - 1, -1, -1):
        color = colors_root_down[depth] if colors_root_down is not None else 0
        if below is None:
            nodes.append(Node(color))
        elif directions[depth] == "L":
            nodes.append(Node(color, below, None))
        elif directions[depth] == "R":
            nodes.append(Node(color, None, below))
        else:
            raise ValueError(f"bad direction {directions[depth]!r}")
        below = len(nodes) - 1
    return ColoredTree(tuple(nodes), below, box_color)


def branch_directions(t: ColoredTree) -> list[str]:
    """Root-down direction word of a branch."""
    if not is_branch(t):
        raise ValueError("not a branch")
    out: list[str] = []
    v = t.root
    while v is not None:
        nd = t.nodes[v]
        if nd.left is not None:
            out.append("L")
            v = nd.left
        elif nd.right is not None:
            out.append("R")
            v = nd.right
        else:
            v = None
    return out


def iter_dbpt(n: int) -> Iterator[LabeledTree]:
    """All decreasing labeled trees of size n (n! of them).

    Enumerated through the inorder bijection, with inorder words in
    lexicographic order.
    """
    for word in itertools.permutations(range(1, n + 1)):
        yield alpha_inverse(word)


def iter_bpt_word(word: Sequence[int]) -> Iterator[ColoredTree]:
    """Colored trees of size ``len(word)-1`` with postorder colors
    ``word[:-1]`` and box color ``word[-1]``.

    For a word of length 1 this is the singleton family holding the empty
    tree with the prescribed box color.
    """
    n = len(word)
    if n < 1:
        raise ValueError("color word must be nonempty")
    if n == 1:
        yield ColoredTree((), None, word[0])
        return
    for sh in shapes(n - 1):
        yield tree_from_shape(sh, postorder_colors=word[:-1], box_color=word[-1])


def iter_branch_word(word: Sequence[int]) -> Iterator[ColoredTree]:
    """Colored branches with postorder colors ``word[:-1]`` and box
    ``word[-1]``; empty for words of length 1 (branches are nonempty)."""
    n = len(word)
    if n < 1:
        raise ValueError("color word must be nonempty")
    if n == 1:
        return
    # postorder of a branch runs bottom-up, so root-down colors are reversed
    colors_root_down = list(reversed(word[:-1]))
    for directions in itertools.product("LR", repeat=n - 2):
        yield branch_from_directions(directions, colors_root_down, word[-1])


def iter_dbpt_word(word: Sequence[int]) -> Iterator[LabeledTree]:
    """Decreasing labeled colored trees of size ``len(word)-1``: the vertex
    labeled k has color ``word[k-1]`` and the box color is ``word[-1]``."""
    n = len(word)
    if n < 1:
        raise ValueError("color word must be nonempty")
    if n == 1:
        yield LabeledTree(ColoredTree((), None, word[0]), ())
        return
    for perm in itertools.permutations(range(1, n)):
        yield alpha_inverse(perm, colors=word, box_color=word[-1])


def enumerate_trees(kind: str, n: int | None = None,
                    word: Sequence[int] | None = None):
    """Dispatch enumeration by family name; exactly one of n/word is given."""
    if (n is None) == (word is None):
        raise ValueError("give a size or a color word, not both")
    kind = kind.lower()
    if word is not None:
        table = {"bpt": iter_bpt_word, "branch": iter_branch_word,
                 "dbpt": iter_dbpt_word}
    else:
        table = {"bpt": iter_bpt, "branch": iter_branches, "dbpt": iter_dbpt}
    if kind not in table:
        raise ValueError(f"unknown tree family {kind!r}")
    return table[kind](word if word is not None else n)
