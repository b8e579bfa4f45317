"""Catalan families: Dyck paths, plane trees and unit interval posets.

Text encodings
--------------
* Dyck paths are strings over ``N`` (north) and ``E`` (east).
* Plane trees are balanced parentheses with the root included and children
  written left to right, so ``"(()())"`` is a root with two leaf children.
* Posets serialize to JSON ``{"n": int, "relations": [[i, j], ...]}`` with
  1-based labels, transitively closed, pairs sorted lexicographically.

Everything here is immutable; all functions are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

NORTH = "N"
EAST = "E"


class EncodingError(ValueError):
    """Malformed text or JSON encoding of a Catalan object.

    ``position`` is the 0-based index of the offending character when one
    can be pinned down, otherwise ``None``.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotUnitIntervalError(ValueError):
    """Raised when a poset is not (2+2)- and (3+1)-free."""


class NotCanonicalError(ValueError):
    """Raised when a poset is not in start-point (canonical) labeling."""


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n + 1, n) // (2 * n + 1)


# ---------------------------------------------------------------------------
# Dyck paths


@dataclass(frozen=True, order=True)
class DyckPath:
    """A Dyck path stored as its ``N``/``E`` step string."""

    steps: str

    def __post_init__(self):
        height = 0
        for pos, ch in enumerate(self.steps):
            if ch == NORTH:
                height += 1
            elif ch == EAST:
                height -= 1
                if height < 0:
                    raise EncodingError("path goes below the diagonal", pos)
            else:
                raise EncodingError(f"unexpected character {ch!r} in Dyck path", pos)
        if height != 0:
            raise EncodingError(
                f"path ends {height} step(s) above the diagonal", len(self.steps)
            )

    @classmethod
    def parse(cls, text: str) -> DyckPath:
        return cls(text.strip())

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def area_vector(path: DyckPath) -> tuple[int, ...]:
    """Full unit squares between the path and the diagonal, row by row.

    Row ``i`` (upper edge on ``y = i``) gets ``(i - 1) - e`` where ``e`` is the
    number of east steps taken before the ``i``-th north step.
    """
    area = []
    east = 0
    for ch in path.steps:
        if ch == NORTH:
            area.append(len(area) - east)
        else:
            east += 1
    return tuple(area)


def check_area_vector(area: Sequence[int]) -> None:
    if not area:
        return
    if area[0] != 0:
        raise ValueError(f"area vector must start with 0, got {area[0]}")
    for i in range(1, len(area)):
        if area[i] < 0 or area[i] > area[i - 1] + 1:
            raise ValueError(
                f"invalid area vector at index {i}: {area[i]} after {area[i - 1]}"
            )


def dyck_from_area(area: Sequence[int]) -> DyckPath:
    check_area_vector(area)
    steps = []
    for i, a in enumerate(area):
        if i:
            # drop from height a_{i-1}+1 down to a_i before the next north step
            steps.append(EAST * (area[i - 1] + 1 - a))
        steps.append(NORTH)
    if area:
        steps.append(EAST * (area[-1] + 1))
    return DyckPath("".join(steps))


# ---------------------------------------------------------------------------
# Plane trees


@dataclass(frozen=True)
class PlaneTree:
    """Rooted ordered tree; ``children`` are listed left to right."""

    children: tuple[PlaneTree, ...] = ()

    @classmethod
    def parse(cls, text: str) -> PlaneTree:
        text = text.strip()
        if not text:
            raise EncodingError("empty tree encoding", 0)
        stack: list[list[PlaneTree]] = []
        root = None
        for pos, ch in enumerate(text):
            if root is not None:
                raise EncodingError("trailing characters after root", pos)
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if not stack:
                    raise EncodingError("unbalanced ')'", pos)
                node = cls(tuple(stack.pop()))
                if stack:
                    stack[-1].append(node)
                else:
                    root = node
            else:
                raise EncodingError(f"unexpected character {ch!r} in tree", pos)
        if root is None:
            raise EncodingError("unbalanced '('", len(text))
        return root

    def encode(self) -> str:
        return "(" + "".join(c.encode() for c in self.children) + ")"

    def __str__(self) -> str:
        return self.encode()

    @property
    def arity(self) -> int:
        return len(self.children)

    @cached_property
    def size(self) -> int:
        """Number of non-root nodes."""
        return sum(1 + c.size for c in self.children)

    @cached_property
    def max_arity(self) -> int:
        return max([self.arity, *(c.max_arity for c in self.children)])

    def levels(self) -> list[list[PlaneTree]]:
        """Nodes grouped by depth, each depth listed right to left.

        ``levels()[0]`` is ``[root]``.  Concatenating ``levels()[1:]`` gives the
        breadth order used throughout: increasing depth, then right to left.
        """
        out = [[self]]
        while True:
            nxt = [c for node in out[-1] for c in reversed(node.children)]
            if not nxt:
                return out
            out.append(nxt)


def tree_nodes(tree: PlaneTree) -> list[tuple[int, tuple[int, ...]]]:
    """Non-root nodes in left-to-right preorder as ``(depth, sibling_path)``.

    ``sibling_path`` holds the right-sibling indices c(u_1), ..., c(u_d) along
    the path from the root, where c counts children from the right, 1-based.
    """
    out = []

    def walk(node, path):
        k = node.arity
        for i, child in enumerate(node.children):
            p = path + (k - i,)
            out.append((len(p), p))
            walk(child, p)

    walk(tree, ())
    return out


# ---------------------------------------------------------------------------
# Posets


@dataclass(frozen=True)
class Poset:
    """Strict partial order on ``{1..n}`` with a transitively closed relation.

    ``(i, j) in relations`` means ``i < j`` in the order.  Arbitrary strict
    orders are allowed (the freeness predicates need them); unit interval
    posets are the ones passing :func:`is_unit_interval`, and canonical ones
    additionally pass :func:`is_canonical`.
    """

    n: int
    relations: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not isinstance(self.relations, frozenset):
            object.__setattr__(self, "relations", frozenset(self.relations))
        for i, j in self.relations:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"label out of range in relation ({i}, {j})")
            if i == j:
                raise ValueError(f"relation is not irreflexive at {i}")

    def down_set(self, i: int) -> frozenset[int]:
        return frozenset(a for a, b in self.relations if b == i)

    def up_set(self, i: int) -> frozenset[int]:
        return frozenset(b for a, b in self.relations if a == i)

    def down_sizes(self) -> list[int]:
        sizes = [0] * (self.n + 1)
        for _, b in self.relations:
            sizes[b] += 1
        return sizes[1:]

    def up_sizes(self) -> list[int]:
        sizes = [0] * (self.n + 1)
        for a, _ in self.relations:
            sizes[a] += 1
        return sizes[1:]

    def relabel(self, new_label: dict[int, int]) -> Poset:
        return Poset(self.n, frozenset((new_label[a], new_label[b]) for a, b in self.relations))

    def sorted_relations(self) -> list[tuple[int, int]]:
        return sorted(self.relations)

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "relations": [list(p) for p in self.sorted_relations()]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> Poset:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise EncodingError(f"invalid JSON: {exc.msg}", exc.pos) from None
        if not isinstance(data, dict) or "n" not in data:
            raise EncodingError("poset JSON must be an object with 'n' and 'relations'")
        n = data["n"]
        rels = data.get("relations", [])
        if not isinstance(n, int) or n < 0:
            raise EncodingError("'n' must be a non-negative integer")
        pairs = []
        for k, pair in enumerate(rels):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, int) for v in pair)
            ):
                raise EncodingError(f"relation #{k} is not a pair of integers")
            pairs.append(tuple(pair))
        try:
            return cls(n, frozenset(pairs))
        except ValueError as exc:
            raise EncodingError(str(exc)) from None

    def __str__(self) -> str:
        return self.to_json()


def is_strict_order(poset: Poset) -> bool:
    rel = poset.relations
    for a, b in rel:
        if (b, a) in rel:
            return False
        for c in poset.up_set(b):
            if (a, c) not in rel:
                return False
    return True


def transitive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    reach = {i: set() for i in range(1, n + 1)}
    for a, b in pairs:
        reach[a].add(b)
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            if k in reach[i]:
                reach[i] |= reach[k]
    return Poset(n, frozenset((i, j) for i in range(1, n + 1) for j in reach[i]))


def poset_from_starting_set(points: Sequence[Fraction | int]) -> Poset:
    """The order ``i < j  iff  x_i + 1 < x_j`` on a strictly increasing set.

    Sorted starting points already give the canonical labeling.
    """
    xs = [Fraction(x) for x in points]
    for i in range(1, len(xs)):
        if not xs[i - 1] < xs[i]:
            raise ValueError(f"starting set is not strictly increasing at index {i}")
    n = len(xs)
    rel = frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if xs[i] + 1 < xs[j]
    )
    return Poset(n, rel)


# ---------------------------------------------------------------------------
# (3+1) / (2+2) freeness by brute force over 4-element subsets


@lru_cache(maxsize=None)
def _four_subsets(n: int) -> np.ndarray:
    return np.array(list(combinations(range(n), 4)), dtype=np.intp).reshape(-1, 4)


_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def _subset_degrees(poset: Poset) -> tuple[np.ndarray, np.ndarray]:
    """Per 4-subset: number of comparable pairs, and each member's degree."""
    n = poset.n
    subsets = _four_subsets(n)
    comparable = np.zeros((n, n), dtype=np.int8)
    for a, b in poset.relations:
        comparable[a - 1, b - 1] = comparable[b - 1, a - 1] = 1
    degree = np.zeros((len(subsets), 4), dtype=np.int8)
    for p, q in _PAIRS:
        c = comparable[subsets[:, p], subsets[:, q]]
        degree[:, p] += c
        degree[:, q] += c
    return degree.sum(axis=1) // 2, degree


def is_three_plus_one_free(poset: Poset) -> bool:
    # In a strict order, 3 comparable pairs plus an isolated member can only
    # be a 3-chain with a fourth element incomparable to all of it.
    if poset.n < 4:
        return True
    edges, degree = _subset_degrees(poset)
    bad = (edges == 3) & (degree == 0).any(axis=1)
    return not bool(bad.any())


def is_two_plus_two_free(poset: Poset) -> bool:
    if poset.n < 4:
        return True
    edges, degree = _subset_degrees(poset)
    bad = (edges == 2) & (degree == 1).all(axis=1)
    return not bool(bad.any())


def is_unit_interval(poset: Poset) -> bool:
    return is_three_plus_one_free(poset) and is_two_plus_two_free(poset)


# ---------------------------------------------------------------------------
# Canonical labeling


def _is_staircase(poset: Poset) -> bool:
    # Every down-set is a prefix {1..d_i} with d_i < i and d nondecreasing,
    # every up-set a suffix with u nonincreasing.  Such a labeling forces a
    # transitive, (2+2)- and (3+1)-free order.
    n = poset.n
    down = [0] * (n + 2)
    up = [0] * (n + 2)
    top_below = [0] * (n + 2)
    low_above = [n + 1] * (n + 2)
    for a, b in poset.relations:
        down[b] += 1
        up[a] += 1
        if a > top_below[b]:
            top_below[b] = a
        if b < low_above[a]:
            low_above[a] = b
    for i in range(1, n + 1):
        d, u = down[i], up[i]
        if i > 1 and (d < down[i - 1] or u > up[i - 1]):
            return False
        # d distinct labels with maximum d are exactly 1..d
        if top_below[i] != d or d >= i:
            return False
        if low_above[i] != n + 1 - u or u > n - i:
            return False
    return True


def is_canonical(poset: Poset) -> bool:
    """True iff ``poset`` is a unit interval order in start-point labeling."""
    return _is_staircase(poset)


def canonical_form(poset: Poset) -> Poset:
    """Relabel by (down-set size ascending, up-set size descending).

    Ties are order-equivalent elements and keep their original relative order.
    Raises :class:`NotUnitIntervalError` for anything that is not a unit
    interval order.
    """
    down = poset.down_sizes()
    up = poset.up_sizes()
    order = sorted(range(1, poset.n + 1), key=lambda i: (down[i - 1], -up[i - 1], i))
    result = poset.relabel({old: new for new, old in enumerate(order, 1)})
    if not _is_staircase(result):
        raise NotUnitIntervalError("poset is not a unit interval order")
    return result


def require_canonical(poset: Poset) -> None:
    if not is_canonical(poset):
        raise NotCanonicalError(
            "poset is not a unit interval order in canonical labeling; "
            "use canonical_form() first"
        )


def posets_isomorphic(p: Poset, q: Poset) -> bool:
    return p.n == q.n and canonical_form(p).relations == canonical_form(q).relations
