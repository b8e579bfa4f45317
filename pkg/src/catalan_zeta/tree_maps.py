"""Bijections between unit interval posets, plane trees and Dyck paths.

Breadth order
-------------
Wherever nodes are listed breadth-first, the order is increasing depth, then
*right to left* within a depth.  This matches the node values below, which
strictly decrease from left to right inside a depth, so the k-th smallest
starting point belongs to the k-th node in breadth order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import (
    EAST,
    NORTH,
    DyckPath,
    PlaneTree,
    Poset,
    require_canonical,
    tree_nodes,
)


# ---------------------------------------------------------------------------
# poset <-> tree


def node_value(sibling_path: Sequence[int], max_arity: int) -> Fraction:
    """``d + (0.c1 c2 ... cd)`` written in base ``max_arity + 2``."""
    base = max_arity + 2
    value = Fraction(len(sibling_path))
    for i, c in enumerate(sibling_path, 1):
        if not 1 <= c <= max_arity:
            raise ValueError(f"sibling index {c} outside 1..{max_arity}")
        value += Fraction(c, base**i)
    return value


def starting_set_of_tree(tree: PlaneTree) -> list[Fraction]:
    """Node values of every non-root node, sorted increasingly."""
    m = tree.max_arity
    return sorted(node_value(path, m) for _, path in tree_nodes(tree))


def _scaled_values(tree: PlaneTree) -> tuple[list[int], int]:
    """Node values times ``(m+2)**depth_max`` as integers, in breadth order.

    Exact like the Fraction version, and cheap enough for exhaustive sweeps.
    """
    base = tree.max_arity + 2
    levels = tree.levels()
    depth_max = len(levels) - 1
    scale = base**depth_max
    values = []
    # (node, scaled fractional part) per level, right to left
    frontier = [(tree, 0)]
    for depth in range(1, depth_max + 1):
        weight = base ** (depth_max - depth)
        nxt = []
        for node, frac in frontier:
            for c, child in enumerate(reversed(node.children), 1):
                f = frac + c * weight
                nxt.append((child, f))
                values.append(depth * scale + f)
        frontier = nxt
    return values, scale


def xi_poset(tree: PlaneTree) -> Poset:
    """Poset realized by the node values; returned already canonical."""
    values, unit = _scaled_values(tree)
    # breadth order (depth asc, right to left) is exactly increasing value
    for a, b in zip(values, values[1:]):
        if not a < b:
            raise AssertionError("node values are not strictly increasing in breadth order")
    n = len(values)
    rel = set()
    j = 0
    for i in range(n):
        # values are sorted, so the elements above i form a suffix
        if j <= i:
            j = i + 1
        while j < n and not values[i] + unit < values[j]:
            j += 1
        rel.update((i + 1, k + 1) for k in range(j, n))
    return Poset(n, frozenset(rel))


def lambda_poset(poset: Poset) -> PlaneTree:
    """Parent of element ``i`` is the largest ``j`` below it, else the root.

    Children are ordered left to right by decreasing label.
    """
    require_canonical(poset)
    n = poset.n
    kids: list[list[int]] = [[] for _ in range(n + 1)]
    parent_of = [0] * (n + 1)
    for a, b in poset.relations:
        if a > parent_of[b]:
            parent_of[b] = a
    for i in range(1, n + 1):
        kids[parent_of[i]].append(i)

    def build(v: int) -> PlaneTree:
        return PlaneTree(tuple(build(c) for c in sorted(kids[v], reverse=True)))

    return build(0)


def check_parent_condition(tree: PlaneTree, value=node_value) -> bool:
    """Parent of u is v  iff  x_v is the largest node value below x_u - 1.

    Equivalently ``x_v + 1 < x_u`` with ``x_v`` maximal, which is how the
    poset-to-tree map picks parents.  The root plays the virtual value
    ``x_1 - 2``, so a child of the root has no node value below ``x_u - 1``.
    """
    m = tree.max_arity
    values: dict[int, Fraction] = {}
    parent: dict[int, int | None] = {}
    counter = iter(range(tree.size))

    def walk(node, path, pid):
        k = node.arity
        for i, child in enumerate(node.children):
            p = path + (k - i,)
            cid = next(counter)
            values[cid] = value(p, m)
            parent[cid] = pid
            walk(child, p, cid)

    walk(tree, (), None)
    ids = list(values)
    for u in ids:
        bound = values[u] - 1
        below = [v for v in ids if values[v] < bound]
        best = max(below, key=values.__getitem__) if below else None
        if parent[u] != best:
            return False
    return True


def parent_gaps(tree: PlaneTree, value=node_value) -> list[tuple[Fraction, int]]:
    """``(x_u - x_parent(u), depth of parent)`` for every node whose parent is not the root."""
    m = tree.max_arity
    out = []

    def walk(node, path):
        k = node.arity
        for i, child in enumerate(node.children):
            p = path + (k - i,)
            if path:
                out.append((value(p, m) - value(path, m), len(path)))
            walk(child, p)

    walk(tree, ())
    return out


# ---------------------------------------------------------------------------
# tree <-> Dyck: clockwise contour walk


def xi_steep(tree: PlaneTree) -> DyckPath:
    """Clockwise contour walk: children are visited right to left."""
    out: list[str] = []

    def walk(node):
        for child in reversed(node.children):
            out.append(NORTH)
            walk(child)
            out.append(EAST)

    walk(tree)
    return DyckPath("".join(out))


def lambda_steep(path: DyckPath) -> PlaneTree:
    # Each north step opens a child to the left of its already-visited siblings.
    stack: list[list] = [[]]
    for ch in path.steps:
        if ch == NORTH:
            stack.append([])
        else:
            node = PlaneTree(tuple(reversed(stack.pop())))
            stack[-1].append(node)
    return PlaneTree(tuple(reversed(stack[0])))


def steep_depths(tree: PlaneTree) -> list[int]:
    """Depths of the non-root nodes in clockwise contour order."""
    out: list[int] = []

    def walk(node, d):
        for child in reversed(node.children):
            out.append(d + 1)
            walk(child, d + 1)

    walk(tree, 0)
    return out


# ---------------------------------------------------------------------------
# tree <-> Dyck: arities in breadth order


def breadth_index(k: int, level_sizes: Sequence[int]) -> tuple[int, int]:
    """Write ``k = s_l - r`` with ``0 <= r < alpha_l``; return ``(l, r)``.

    ``level_sizes[l - 1]`` is the number of nodes at depth ``l``.
    """
    s = 0
    for depth, alpha in enumerate(level_sizes, 1):
        s += alpha
        if k <= s:
            r = s - k
            if not 0 <= r < alpha:
                break
            return depth, r
    raise ValueError(f"index {k} is outside 1..{sum(level_sizes)}")


def breadth_order(tree: PlaneTree) -> list[PlaneTree]:
    """Non-root nodes by increasing depth, then right to left."""
    return [node for level in tree.levels()[1:] for node in level]


def xi_bounce(tree: PlaneTree) -> DyckPath:
    """North run on ``x = 0`` is the root arity; on ``x = k`` the arity of the
    k-th node in breadth order."""
    nodes = breadth_order(tree)
    runs = [tree.arity] + [node.arity for node in nodes[:-1]]
    return DyckPath("".join(NORTH * r + EAST for r in runs) if nodes else "")


def north_runs(path: DyckPath) -> list[int]:
    """Number of north steps on each vertical line ``x = 0..n-1``."""
    runs = [0]
    for ch in path.steps:
        if ch == NORTH:
            runs[-1] += 1
        else:
            runs.append(0)
    return runs[:-1]


def lambda_bounce(path: DyckPath) -> PlaneTree:
    """Rebuild the tree level by level, reading north runs as arities."""
    n = path.size
    arities = north_runs(path) + [0]
    # children[k] gets filled for node k in breadth order (0 = root);
    # a node's children are created right to left, like the breadth order
    children: list[list[int]] = [[] for _ in range(n + 1)]
    next_id = 1
    for k in range(n + 1):
        if k >= next_id and k:
            raise AssertionError(f"north runs of {path} do not describe a tree")
        for _ in range(arities[k]):
            children[k].append(next_id)
            next_id += 1
    if next_id != n + 1:
        raise AssertionError(f"north runs of {path} do not describe a tree")

    def build(k: int) -> PlaneTree:
        return PlaneTree(tuple(build(c) for c in reversed(children[k])))

    return build(0)
