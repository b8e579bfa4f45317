"""Brute-force reference implementations, kept independent of the library paths."""

from itertools import combinations, permutations

from catalan_zeta.core import DyckPath, PlaneTree, Poset


def catalan_by_recurrence(n):
    cat = [1]
    for k in range(n):
        cat.append(sum(cat[i] * cat[k - i] for i in range(k + 1)))
    return cat[n]


def all_dyck_strings(n):
    """Every N/E word of length 2n filtered by the prefix condition."""
    out = []
    for north_positions in combinations(range(2 * n), n):
        word = ["E"] * (2 * n)
        for p in north_positions:
            word[p] = "N"
        height = 0
        for ch in word:
            height += 1 if ch == "N" else -1
            if height < 0:
                break
        else:
            out.append("".join(word))
    return sorted(out)


def area_by_squares(steps):
    """Count full unit cells between path and diagonal, row by row."""
    n = len(steps) // 2
    # x position of the path while it climbs from y = i - 1 to y = i
    x = y = 0
    row_x = {}
    for ch in steps:
        if ch == "N":
            y += 1
            row_x[y] = x
        else:
            x += 1
    # cell [c, c+1] x [i-1, i] is inside when c >= path x and c + 1 <= i - 1
    return tuple(sum(1 for c in range(n) if c >= row_x[i] and c + 1 <= i - 1) for i in range(1, n + 1))


def is_strict_order(n, rel):
    for a, b in rel:
        if a == b or (b, a) in rel:
            return False
    for a, b in rel:
        for c, d in rel:
            if b == c and (a, d) not in rel:
                return False
    return True


def all_strict_orders(n):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for mask in range(1 << len(pairs)):
        rel = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        if is_strict_order(n, rel):
            yield Poset(n, rel)


def has_pattern_3_plus_1(p):
    rel = p.relations

    def comparable(x, y):
        return (x, y) in rel or (y, x) in rel

    for quad in combinations(range(1, p.n + 1), 4):
        for a, b, c, d in permutations(quad):
            if (a, b) in rel and (b, c) in rel and not any(comparable(d, z) for z in (a, b, c)):
                return True
    return False


def has_pattern_2_plus_2(p):
    rel = p.relations

    def comparable(x, y):
        return (x, y) in rel or (y, x) in rel

    for quad in combinations(range(1, p.n + 1), 4):
        for a, b, c, d in permutations(quad):
            if (
                (a, b) in rel
                and (c, d) in rel
                and not any(comparable(x, y) for x in (a, b) for y in (c, d))
            ):
                return True
    return False


def brute_canonical(p):
    """Lexicographically least relabeling over all permutations."""
    best = None
    for perm in permutations(range(1, p.n + 1)):
        image = tuple(sorted((perm[a - 1], perm[b - 1]) for a, b in p.relations))
        if best is None or image < best:
            best = image
    return best


def brute_isomorphic(p, q):
    return p.n == q.n and brute_canonical(p) == brute_canonical(q)


def tree_nodes_with_parents(tree):
    """Preorder list of (node object, parent index or None, depth, right-sibling index)."""
    out = []

    def walk(node, pid, depth):
        k = len(node.children)
        for i, child in enumerate(node.children):
            out.append((child, pid, depth + 1, k - i))
            walk(child, len(out) - 1, depth + 1)

    walk(tree, None, 0)
    return out


def xi_bounce_literal(tree):
    """Runs from the (l, r) decomposition k = s_l - r; the (r+1)-st node of
    depth l counted from the left."""
    levels_ltr = []
    frontier = [tree]
    while True:
        frontier = [c for node in frontier for c in node.children]
        if not frontier:
            break
        levels_ltr.append(frontier)
    n = sum(len(lv) for lv in levels_ltr)
    if n == 0:
        return DyckPath("")
    runs = [len(tree.children)]
    for k in range(1, n):
        s = 0
        for level in levels_ltr:
            s += len(level)
            if k <= s:
                r = s - k
                runs.append(len(level[r].children))
                break
    return DyckPath("".join("N" * r + "E" for r in runs))


def trees_by_recursion(n):
    """All plane trees with n non-root nodes, from ordered forests."""

    def forests(k):
        if k == 0:
            return [()]
        out = []
        for first in range(1, k + 1):
            for sub in forests(first - 1):
                for rest in forests(k - first):
                    out.append((PlaneTree(sub),) + rest)
        return out

    return [PlaneTree(f) for f in forests(n)]
