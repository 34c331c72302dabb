"""Independent brute-force oracles used by the tests.

Everything here is written from the definitions, on plain tuples, sharing
no code with the package: filtering the whole group instead of generating,
breadth-first search instead of counting inversions, dumb enumeration over
entry ranges instead of pruned recursion.
"""

import itertools
from collections import deque


def filter_left_reps(n, members):
    """All of S_n passing the ascent test, by exhaustive filtering."""
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        if all(p[h - 1] < p[h] for h in members):
            out.append(p)
    return out


def bfs_lengths(n):
    """Coxeter length of every permutation as graph distance from the
    identity under right multiplication by adjacent transpositions."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for i in range(n - 1):
            q = list(p)
            q[i], q[i + 1] = q[i + 1], q[i]
            q = tuple(q)
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def brute_tables(nu, kappa):
    """Set of all margin matrices, enumerated row by row over full entry
    ranges with the column check left to the end."""
    s, r = len(nu), len(kappa)
    rows_choices = []
    for i in range(s):
        rows_choices.append([
            row for row in itertools.product(range(nu[i] + 1), repeat=r)
            if sum(row) == nu[i]
        ])
    out = set()
    for rows in itertools.product(*rows_choices):
        if all(sum(rows[i][j] for i in range(s)) == kappa[j]
               for j in range(r)):
            out.add(tuple(rows))
    return out


def naive_convolve(a_items, b_items):
    """Group-algebra product on raw tuples, no canonicalisation tricks."""
    acc = {}
    for ax, ca in a_items:
        for by, cb in b_items:
            z = tuple(ax[v - 1] for v in by)
            acc[z] = acc.get(z, 0) + ca * cb
    return {k: v for k, v in acc.items() if v}


def young_subgroup(n, members):
    """All permutations preserving each component of the subset graph,
    with components found by scanning runs of consecutive generators."""
    blocks = []
    block = [1]
    for i in range(1, n):
        if i in members:
            block.append(i + 1)
        else:
            blocks.append(block)
            block = [i + 1]
    blocks.append(block)
    out = []
    for assignment in itertools.product(
            *[itertools.permutations(b) for b in blocks]):
        images = [0] * n
        for blk, perm in zip(blocks, assignment):
            for slot, value in zip(blk, perm):
                images[slot - 1] = value
        out.append(tuple(images))
    return out
