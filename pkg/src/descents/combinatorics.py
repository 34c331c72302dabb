"""Compositions, generator subsets, their graphs, and margin matrices.

A subset J of the adjacent transpositions ``{s_1 .. s_{n-1}}`` is recorded by
generator index, and drawn as a graph on vertices ``1..n`` with an edge
``{i, i+1}`` for each ``i`` in J.  Listing the connected components by least
element (the *ordered presentation*) and taking their sizes turns J into a
composition of n; the correspondence is bijective.

>>> j = GeneratorSubset(9, [2, 3, 7])
>>> subset_to_composition(j).to_text()
'1,3,1,1,2,1'
>>> ordered_presentation(graph_of_subset(j)).to_text()
'({1},{2,3,4},{5},{6},{7,8},{9})'
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from . import backend
from .perms import Permutation


class Composition:
    """A sequence of positive integers; ``n`` is their sum."""

    __slots__ = ("parts", "n")

    def __init__(self, parts: Iterable[int]):
        parts = tuple(parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers: {parts!r}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Composition is immutable")

    @classmethod
    def from_text(cls, text: str) -> "Composition":
        """Parse comma-separated parts, e.g. ``"1,3,1,1,2,1"``."""
        try:
            parts = [int(p) for p in text.strip().split(",")]
        except ValueError:
            raise ValueError(f"bad composition text: {text!r}") from None
        return cls(parts)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Composition({self.to_text()!r})"


class GeneratorSubset:
    """A subset of the generator indices ``1..n-1`` for a fixed degree n."""

    __slots__ = ("n", "members")

    def __init__(self, n: int, members: Iterable[int] = ()):
        if n < 1:
            raise ValueError("degree must be at least 1")
        members = frozenset(members)
        for m in members:
            if not isinstance(m, int) or not 1 <= m <= n - 1:
                raise ValueError(
                    f"generator index {m!r} outside 1..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorSubset is immutable")

    @classmethod
    def from_text(cls, n: int, text: str) -> "GeneratorSubset":
        """Parse ``"2,3,7"``; the empty string is the empty subset."""
        text = text.strip()
        if not text:
            return cls(n)
        try:
            members = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError(f"bad subset text: {text!r}") from None
        return cls(n, members)

    def to_text(self) -> str:
        return ",".join(str(m) for m in sorted(self.members))

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, m: int) -> bool:
        return m in self.members

    def __eq__(self, other) -> bool:
        return (isinstance(other, GeneratorSubset)
                and self.n == other.n and self.members == other.members)

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    def __repr__(self) -> str:
        return f"GeneratorSubset({self.n}, {{{self.to_text()}}})"


class SubsetGraph:
    """A simple graph on vertices ``1..n``; edges need not be consecutive.

    Graphs of generator subsets only have edges ``{i, i+1}``, but images
    under a permutation produce arbitrary edges, which is why components
    are found by union-find rather than by scanning runs.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("degree must be at least 1")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def __setattr__(self, name, value):
        raise AttributeError("SubsetGraph is immutable")

    def image_under(self, x: Permutation) -> "SubsetGraph":
        """Relabel every vertex v as x(v)."""
        if x.n != self.n:
            raise ValueError("degree mismatch")
        img = x.images
        return SubsetGraph(self.n,
                           ((img[u - 1], img[v - 1]) for u, v in self.edges))

    def intersection(self, other: "SubsetGraph") -> "SubsetGraph":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return SubsetGraph(self.n, self.edges & other.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubsetGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        body = " ".join(f"{{{u},{v}}}" for u, v in self.sorted_edges())
        return f"SubsetGraph({self.n}, {body or 'no edges'})"


class OrderedPresentation:
    """Connected components listed by least element.

    The constructor validates rather than normalises the order: blocks must
    partition ``1..n`` and already be sorted by their minima, so a claimed
    presentation in the wrong order is rejected, not silently fixed.
    """

    __slots__ = ("blocks", "n")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        if not blocks:
            raise ValueError("presentation needs at least one block")
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("blocks must be non-empty")
            if seen & set(b):
                raise ValueError("blocks must be disjoint")
            seen |= set(b)
        n = len(seen)
        if seen != set(range(1, n + 1)):
            raise ValueError(f"blocks must partition 1..{n}")
        mins = [b[0] for b in blocks]
        if mins != sorted(mins):
            raise ValueError("blocks must be listed by least element")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("OrderedPresentation is immutable")

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def to_text(self) -> str:
        inner = ",".join("{" + ",".join(str(v) for v in b) + "}"
                         for b in self.blocks)
        return f"({inner})"

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrderedPresentation)
                and self.blocks == other.blocks)

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"OrderedPresentation({self.to_text()})"


class MarginMatrix:
    """A non-negative integer matrix together with its margins.

    Rows sum to ``row_margins`` and columns to ``col_margins``; the
    constructor checks both.
    """

    __slots__ = ("entries", "row_margins", "col_margins")

    def __init__(self, entries: Iterable[Iterable[int]],
                 row_margins: Composition, col_margins: Composition):
        entries = tuple(tuple(row) for row in entries)
        s, r = len(row_margins.parts), len(col_margins.parts)
        if len(entries) != s or any(len(row) != r for row in entries):
            raise ValueError("matrix shape does not match margins")
        for row in entries:
            for v in row:
                if not isinstance(v, int) or v < 0:
                    raise ValueError("entries must be non-negative integers")
        if tuple(sum(row) for row in entries) != row_margins.parts:
            raise ValueError("row sums do not match row margins")
        if tuple(sum(col) for col in zip(*entries)) != col_margins.parts:
            raise ValueError("column sums do not match column margins")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "row_margins", row_margins)
        object.__setattr__(self, "col_margins", col_margins)

    def __setattr__(self, name, value):
        raise AttributeError("MarginMatrix is immutable")

    @classmethod
    def from_entries(cls, entries: Iterable[Iterable[int]]) -> "MarginMatrix":
        entries = tuple(tuple(row) for row in entries)
        rows = Composition(tuple(sum(row) for row in entries))
        cols = Composition(tuple(sum(col) for col in zip(*entries)))
        return cls(entries, rows, cols)

    def reading_word(self) -> Composition:
        """Non-zero entries scanned row by row.

        >>> MarginMatrix.from_entries([[0, 1], [2, 0]]).reading_word()
        Composition('1,2')
        """
        return Composition(v for row in self.entries for v in row if v)

    def to_text(self) -> str:
        return "[" + "; ".join(" ".join(str(v) for v in row)
                               for row in self.entries) + "]"

    def __eq__(self, other) -> bool:
        return isinstance(other, MarginMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"MarginMatrix({[list(r) for r in self.entries]!r})"


# ---------------------------------------------------------------------------
# subset <-> composition

def subset_to_composition(j: GeneratorSubset) -> Composition:
    """Sizes of the components of the graph of J, in order."""
    parts = []
    size = 1
    for i in range(1, j.n):
        if i in j.members:
            size += 1
        else:
            parts.append(size)
            size = 1
    parts.append(size)
    return Composition(parts)


def composition_to_subset(kappa: Composition) -> GeneratorSubset:
    """The generator subset whose graph components have sizes ``kappa``.

    These are all indices except the proper partial sums of ``kappa``.
    """
    sums = set(itertools.accumulate(kappa.parts[:-1]))
    return GeneratorSubset(kappa.n,
                           (i for i in range(1, kappa.n) if i not in sums))


def _parts_to_mask(parts: Sequence[int], n: int) -> int:
    mask = 0
    acc = 0
    for p in parts[:-1]:
        acc += p
        mask |= 1 << (acc - 1)
    return mask


def _mask_to_parts(mask: int, n: int) -> tuple[int, ...]:
    parts = []
    prev = 0
    for i in range(1, n):
        if mask >> (i - 1) & 1:
            parts.append(i - prev)
            prev = i
    parts.append(n - prev)
    return tuple(parts)


def all_generator_subsets(n: int) -> list[GeneratorSubset]:
    """All 2^(n-1) subsets, lexicographically by sorted index tuple."""
    tuples = itertools.chain.from_iterable(
        itertools.combinations(range(1, n), k) for k in range(n))
    return [GeneratorSubset(n, t) for t in sorted(tuples)]


def all_compositions(n: int) -> list[Composition]:
    """All compositions of n, in the subset order of :func:`all_generator_subsets`."""
    return [subset_to_composition(j) for j in all_generator_subsets(n)]


# ---------------------------------------------------------------------------
# graphs

def graph_of_subset(j: GeneratorSubset) -> SubsetGraph:
    return SubsetGraph(j.n, ((i, i + 1) for i in j.members))


def apply_permutation(x: Permutation, g: SubsetGraph) -> SubsetGraph:
    return g.image_under(x)


def intersect(g: SubsetGraph, h: SubsetGraph) -> SubsetGraph:
    return g.intersection(h)


def ordered_presentation(g: SubsetGraph) -> OrderedPresentation:
    """Connected components of ``g`` sorted by least element (union-find)."""
    parent = list(range(g.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        groups.setdefault(find(v), []).append(v)
    return OrderedPresentation(groups[root] for root in sorted(groups))


def to_dot(g: SubsetGraph, clustered: bool = True) -> str:
    """Graphviz DOT text; components become clusters when ``clustered``."""
    lines = ["graph G {"]
    if clustered:
        for idx, block in enumerate(ordered_presentation(g)):
            lines.append(f"  subgraph cluster_{idx} {{")
            lines.append("    label=\"{" +
                         ",".join(str(v) for v in block) + "}\";")
            for v in block:
                lines.append(f"    {v};")
            lines.append("  }")
    else:
        for v in range(1, g.n + 1):
            lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# margin matrices

def contingency_tables(row_margins: Composition,
                       col_margins: Composition) -> Iterator[MarginMatrix]:
    """All matrices with the given margins, in the kernels' fixed order
    (row-major lexicographic, largest entries first)."""
    if row_margins.n != col_margins.n:
        raise ValueError("margins must be compositions of the same n")
    for entries in backend.enumerate_tables(row_margins.parts,
                                            col_margins.parts):
        yield MarginMatrix(entries, row_margins, col_margins)


def reading_word(z: MarginMatrix) -> Composition:
    return z.reading_word()
