"""Minimal-length left coset representatives and the margin-matrix bijection.

For a generator subset K the set ``X_K`` of minimal-length representatives
of the cosets of the standard parabolic subgroup is cut out by the ascent
test ``x(h) < x(h+1)`` for every h in K.  A permutation lying in ``X_K``
whose inverse lies in ``X_J`` meets both conditions at once; these double
representatives are counted by margin matrices via block intersections.

>>> from .combinatorics import GeneratorSubset
>>> k = GeneratorSubset(3, [2])
>>> [x.to_text() for x in enumerate_left_reps(k)]
['123', '213', '312']
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .combinatorics import (
    Composition,
    GeneratorSubset,
    MarginMatrix,
    OrderedPresentation,
    graph_of_subset,
    intersect,
    ordered_presentation,
    subset_to_composition,
)
from .perms import Permutation

#: Representative enumeration is output-linear but outputs can reach n!,
#: so the degree is capped unless the caller raises the bound.
BASIS_DEGREE_MAX = 12

#: Default degree caps for the exhaustive verification sweeps.
LEMMA_DEGREE_DEFAULT = 6
PARABOLIC_DEGREE_DEFAULT = 5


def is_left_rep(x: Permutation, k: GeneratorSubset) -> bool:
    """Ascent test: x is the shortest element of its coset x*W_K.

    >>> is_left_rep(Permutation.from_text("132"), GeneratorSubset(3, [2]))
    False
    """
    if x.n != k.n:
        raise ValueError("degree mismatch")
    images = x.images
    return all(images[h - 1] < images[h] for h in k.members)


@lru_cache(maxsize=None)
def _rep_images(n: int, parts: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # Choose which values land in each consecutive block of positions; a
    # block reads its values in increasing order.  Lexicographic output.
    out: list[tuple[int, ...]] = []
    images = [0] * n

    def place(block: int, start: int, pool: tuple[int, ...]) -> None:
        if block == len(parts):
            out.append(tuple(images))
            return
        size = parts[block]
        for chosen in itertools.combinations(pool, size):
            images[start:start + size] = chosen
            taken = set(chosen)
            place(block + 1, start + size,
                  tuple(v for v in pool if v not in taken))

    place(0, 0, tuple(range(1, n + 1)))
    return tuple(out)


def enumerate_left_reps(k: GeneratorSubset,
                        max_degree: int | None = None) -> Iterator[Permutation]:
    """Stream ``X_K`` in lexicographic one-line order.

    Representatives are generated directly as block interleavings (never by
    filtering all of S_n); the count is ``n!`` over the product of the
    factorials of the component sizes.
    """
    limit = BASIS_DEGREE_MAX if max_degree is None else max_degree
    if k.n > limit:
        raise ValueError(
            f"degree {k.n} above bound {limit}; pass max_degree to override")
    parts = subset_to_composition(k).parts
    for images in _rep_images(k.n, parts):
        yield Permutation(images, check=False)


def enumerate_double_set(j: GeneratorSubset, k: GeneratorSubset,
                         max_degree: int | None = None) -> Iterator[Permutation]:
    """Permutations lying in ``X_K`` whose inverses lie in ``X_J``."""
    if j.n != k.n:
        raise ValueError("degree mismatch")
    for x in enumerate_left_reps(k, max_degree=max_degree):
        if is_left_rep(x.inverse(), j):
            yield x


def _check_double_rep(x: Permutation, j: GeneratorSubset,
                      k: GeneratorSubset) -> None:
    if x.n != j.n or j.n != k.n:
        raise ValueError("degree mismatch")
    if not (is_left_rep(x, k) and is_left_rep(x.inverse(), j)):
        raise ValueError(
            f"{x.to_text()} is not a double representative for the given pair")


def intersection_table(x: Permutation, j: GeneratorSubset,
                       k: GeneratorSubset) -> MarginMatrix:
    """Block-intersection counts for a double representative.

    Entry ``(m, q)`` counts ``x^{-1}(J_q)`` inside ``K_m``, where ``J_q`` and
    ``K_m`` run over the ordered components of the two subset graphs.  Rows
    therefore sum to the composition of K and columns to the composition of
    J, and on the double set the map is a bijection onto all margin
    matrices.
    """
    _check_double_rep(x, j, k)
    j_blocks = ordered_presentation(graph_of_subset(j)).blocks
    k_blocks = ordered_presentation(graph_of_subset(k)).blocks
    xi = x.inverse().images
    pulled = [frozenset(xi[u - 1] for u in block) for block in j_blocks]
    entries = [[sum(1 for v in pb if v in km) for pb in pulled]
               for km in (set(b) for b in k_blocks)]
    return MarginMatrix(entries,
                        subset_to_composition(k), subset_to_composition(j))


def predicted_presentation(x: Permutation, j: GeneratorSubset,
                           k: GeneratorSubset) -> OrderedPresentation:
    """The intersections ``x^{-1}(J_q) & K_m`` listed q-inner, empty ones
    dropped.  For a double representative this lists the components of the
    intersection graph in least-element order."""
    _check_double_rep(x, j, k)
    j_blocks = ordered_presentation(graph_of_subset(j)).blocks
    k_blocks = ordered_presentation(graph_of_subset(k)).blocks
    xi = x.inverse().images
    pulled = [frozenset(xi[u - 1] for u in block) for block in j_blocks]
    blocks = []
    for km in k_blocks:
        kset = set(km)
        for pb in pulled:
            inter = pb & kset
            if inter:
                blocks.append(sorted(inter))
    return OrderedPresentation(blocks)


def _presentation_subgroup(blocks) -> set[Permutation]:
    """All permutations preserving each block setwise (a Young subgroup)."""
    n = sum(len(b) for b in blocks)
    members = set()
    for assignment in itertools.product(
            *[itertools.permutations(b) for b in blocks]):
        images = [0] * n
        for block, perm in zip(blocks, assignment):
            for slot, value in zip(block, perm):
                images[slot - 1] = value
        members.add(Permutation(images, check=False))
    return members


@dataclass
class PairFailure:
    """One counterexample found while verifying a subset pair."""
    x_text: str
    check: str
    detail: str

    def record(self) -> dict:
        return {"x": self.x_text, "check": self.check, "detail": self.detail}


@dataclass
class PairReport:
    """Outcome of :func:`verify_subset_pair` for one (J, K) pair."""
    n: int
    j_members: tuple[int, ...]
    k_members: tuple[int, ...]
    checks: tuple[str, ...]
    witnesses: int = 0
    failure_count: int = 0
    failures: list[PairFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self) -> dict:
        return {
            "n": self.n,
            "j": list(self.j_members),
            "k": list(self.k_members),
            "checks": list(self.checks),
            "witnesses": self.witnesses,
            "failure_count": self.failure_count,
            "failures": [f.record() for f in self.failures],
            "passed": self.passed,
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (f"{status} n={self.n} J={{{','.join(map(str, self.j_members))}}}"
                f" K={{{','.join(map(str, self.k_members))}}}"
                f" witnesses={self.witnesses}")
        if self.passed:
            return head
        lines = [head, f"  failures: {self.failure_count}"]
        for f in self.failures:
            lines.append(f"  x={f.x_text} [{f.check}] {f.detail}")
        if self.failure_count > len(self.failures):
            lines.append(f"  ... and {self.failure_count - len(self.failures)}"
                         " more")
        return "\n".join(lines)


def verify_subset_pair(j: GeneratorSubset, k: GeneratorSubset,
                       parabolic: bool | None = None,
                       max_failures: int = 10,
                       max_degree: int | None = None) -> PairReport:
    """Check every double representative of a pair against three claims.

    For each x in the double set:

    * ``presentation`` - the predicted block intersections equal the
      ordered presentation of the intersection graph
      ``x^{-1}(graph J) & graph K`` computed independently by union-find;
    * ``reading-word`` - the predicted block sizes equal the reading word
      of the intersection table of x;
    * ``parabolic`` (degree <= 5 unless forced) - conjugating the Young
      subgroup of J by x and intersecting with the Young subgroup of K
      yields exactly the Young subgroup of the intersection graph.

    Failures are collected up to ``max_failures`` instead of stopping at
    the first; ``failure_count`` still counts them all.
    """
    if j.n != k.n:
        raise ValueError("degree mismatch")
    n = j.n
    limit = LEMMA_DEGREE_DEFAULT if max_degree is None else max_degree
    if n > limit:
        raise ValueError(
            f"degree {n} above bound {limit}; pass max_degree to override")
    if parabolic is None:
        parabolic = n <= PARABOLIC_DEGREE_DEFAULT

    checks = ["presentation", "reading-word"]
    if parabolic:
        checks.append("parabolic")
    report = PairReport(n, j.sorted_members(), k.sorted_members(),
                        tuple(checks))

    j_graph = graph_of_subset(j)
    k_graph = graph_of_subset(k)
    if parabolic:
        j_subgroup = _presentation_subgroup(
            ordered_presentation(j_graph).blocks)
        k_blocks = [set(b) for b in ordered_presentation(k_graph).blocks]

    def fail(x: Permutation, check: str, detail: str) -> None:
        report.failure_count += 1
        if len(report.failures) < max_failures:
            report.failures.append(PairFailure(x.to_text(), check, detail))

    for x in enumerate_double_set(j, k):
        report.witnesses += 1
        computed = ordered_presentation(
            intersect(j_graph.image_under(x.inverse()), k_graph))
        try:
            predicted = predicted_presentation(x, j, k)
        except ValueError as exc:
            fail(x, "presentation", f"prediction rejected: {exc}")
            continue
        if predicted != computed:
            fail(x, "presentation",
                 f"predicted {predicted.to_text()} "
                 f"but components are {computed.to_text()}")
        word = intersection_table(x, j, k).reading_word()
        if predicted.block_sizes() != word.parts:
            fail(x, "reading-word",
                 f"block sizes {predicted.block_sizes()} "
                 f"!= reading word {word.parts}")
        if parabolic:
            xinv = x.inverse()
            conjugated = set()
            for w in j_subgroup:
                wc = xinv * w * x
                if all({wc.images[v - 1] for v in b} == b for b in k_blocks):
                    conjugated.add(wc)
            expected = _presentation_subgroup(computed.blocks)
            if conjugated != expected:
                fail(x, "parabolic",
                     f"conjugated intersection has {len(conjugated)} "
                     f"elements, Young subgroup has {len(expected)}")
    return report
