"""The descent algebra of S_n: basis elements indexed by compositions.

``B(kappa)`` stands for the sum of the minimal coset representatives
``X_kappa``.  Products expand over margin matrices: every matrix with row
margins ``nu`` and column margins ``kappa`` contributes the basis element of
its reading word, so

    B(kappa) * B(nu) = sum over such matrices of B(reading word).

The group-algebra oracle recomputes the same product by brute force from
the defining sums and must agree exactly.

>>> kappa, nu = Composition((2, 1)), Composition((1, 2))
>>> str(solomon_multiply(kappa, nu))
'B(1,1,1) + B(1,2)'
"""

from __future__ import annotations

import csv
import itertools
import math
from functools import lru_cache
from typing import Iterable, Mapping, TextIO

from . import backend
from .combinatorics import (
    Composition,
    _mask_to_parts,
    _parts_to_mask,
    all_compositions,
    composition_to_subset,
)
from .cosets import BASIS_DEGREE_MAX
from .perms import (
    ORACLE_DEGREE_DEFAULT,
    GroupAlgebraElement,
    Permutation,
    algebra_multiply,
    check_coefficient,
)

#: Version stamp for the structured export format.
STRUCTURE_SCHEMA_VERSION = 1


class DescentElement:
    """An integer combination of basis elements, keyed by composition."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Composition, int] | None = None,
                 check: bool = True):
        clean: dict[Composition, int] = {}
        if terms:
            for comp, coeff in terms.items():
                if check:
                    if not isinstance(comp, Composition):
                        raise ValueError("terms must be keyed by Composition")
                    if comp.n != n:
                        raise ValueError(
                            f"degree mismatch: composition of {comp.n} in an "
                            f"element for n={n}")
                    check_coefficient(coeff)
                if coeff:
                    clean[comp] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DescentElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "DescentElement":
        return cls(n)

    def coefficient(self, comp: Composition) -> int:
        return self.terms.get(comp, 0)

    def sorted_terms(self) -> list[tuple[Composition, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].parts)

    def is_zero(self) -> bool:
        return not self.terms

    def _combine(self, other: "DescentElement", sign: int) -> "DescentElement":
        if not isinstance(other, DescentElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("degree mismatch")
        terms = dict(self.terms)
        for comp, coeff in other.terms.items():
            terms[comp] = check_coefficient(terms.get(comp, 0) + sign * coeff)
        return DescentElement(self.n, terms, check=False)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return DescentElement(self.n,
                              {c: -v for c, v in self.terms.items()},
                              check=False)

    def __mul__(self, other):
        if isinstance(other, DescentElement):
            return element_multiply(self, other)
        if isinstance(other, int):
            return DescentElement(
                self.n,
                {c: check_coefficient(v * other)
                 for c, v in self.terms.items()},
                check=False)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (isinstance(other, DescentElement)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        """Render like ``B(1,1,1) + B(1,2)`` or ``2 B(1,1)``; zero is ``0``."""
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for comp, coeff in self.sorted_terms():
            base = f"B({comp.to_text()})"
            mag = abs(coeff)
            body = base if mag == 1 else f"{mag} {base}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"DescentElement({self.n}, {str(self)!r})"


def basis_element(kappa: Composition) -> DescentElement:
    """The basis element ``B(kappa)``."""
    return DescentElement(kappa.n, {kappa: 1}, check=False)


def identity_element(n: int) -> DescentElement:
    """``B(n)``: the single-part composition indexes the identity."""
    return basis_element(Composition((n,)))


@lru_cache(maxsize=None)
def _solomon(n: int, kappa_parts: tuple[int, ...],
             nu_parts: tuple[int, ...]) -> DescentElement:
    counts = backend.reading_word_counts(nu_parts, kappa_parts, n)
    terms = {Composition(_mask_to_parts(mask, n)): c
             for mask, c in counts.items()}
    return DescentElement(n, terms, check=False)


def solomon_multiply(kappa: Composition, nu: Composition) -> DescentElement:
    """Basis product by the margin-matrix rule (no group enumeration)."""
    if kappa.n != nu.n:
        raise ValueError("degree mismatch")
    return _solomon(kappa.n, kappa.parts, nu.parts)


def element_multiply(a: DescentElement, b: DescentElement) -> DescentElement:
    """Bilinear extension of :func:`solomon_multiply`."""
    if a.n != b.n:
        raise ValueError("degree mismatch")
    terms: dict[Composition, int] = {}
    for kappa, ca in a.terms.items():
        for nu, cb in b.terms.items():
            scale = check_coefficient(ca * cb)
            for eta, c in _solomon(a.n, kappa.parts, nu.parts).terms.items():
                terms[eta] = check_coefficient(
                    terms.get(eta, 0) + scale * c)
    return DescentElement(a.n, terms, check=False)


def to_group_algebra(a: DescentElement,
                     max_degree: int | None = None) -> GroupAlgebraElement:
    """Expand into the group algebra: each ``B(eta)`` becomes the sum of
    its coset representatives.

    The coefficient a permutation receives depends only on its descent
    set, so the expansion precomputes one weight per descent class and
    then sweeps S_n once.
    """
    n = a.n
    limit = ORACLE_DEGREE_DEFAULT if max_degree is None else max_degree
    if n > limit:
        raise ValueError(
            f"degree {n} above bound {limit}; pass max_degree to override")
    masks = []
    for comp, coeff in a.terms.items():
        required = composition_to_subset(comp).members
        m = 0
        for i in required:
            m |= 1 << (i - 1)
        masks.append((m, coeff))
    size = 1 << (n - 1)
    weight = [0] * size
    for d in range(size):
        w = 0
        for m, coeff in masks:
            if m & d == 0:  # no required ascent is a descent
                w += coeff
        weight[d] = check_coefficient(w)
    terms: dict[Permutation, int] = {}
    for images in itertools.permutations(range(1, n + 1)):
        d = 0
        for h in range(n - 1):
            if images[h] > images[h + 1]:
                d |= 1 << h
        w = weight[d]
        if w:
            terms[Permutation(images, check=False)] = w
    return GroupAlgebraElement(n, terms, check=False)


@lru_cache(maxsize=None)
def _basis_indicator(n: int, parts: tuple[int, ...],
                     limit: int) -> GroupAlgebraElement:
    return to_group_algebra(
        DescentElement(n, {Composition(parts): 1}, check=False),
        max_degree=limit)


def oracle_multiply(kappa: Composition, nu: Composition,
                    max_degree: int | None = None) -> GroupAlgebraElement:
    """Brute-force product of the defining sums in the group algebra.

    Shares no logic with :func:`solomon_multiply`; the two must agree
    after :func:`to_group_algebra`.
    """
    if kappa.n != nu.n:
        raise ValueError("degree mismatch")
    limit = ORACLE_DEGREE_DEFAULT if max_degree is None else max_degree
    a = _basis_indicator(kappa.n, kappa.parts, limit)
    b = _basis_indicator(nu.n, nu.parts, limit)
    return algebra_multiply(a, b)


def oracle_agrees(kappa: Composition, nu: Composition,
                  max_degree: int | None = None) -> bool:
    """Does the margin-matrix product match the brute-force product?"""
    expanded = to_group_algebra(solomon_multiply(kappa, nu),
                                max_degree=max_degree)
    return expanded == oracle_multiply(kappa, nu, max_degree=max_degree)


# ---------------------------------------------------------------------------
# counting identity

def left_rep_count(nu: Composition) -> int:
    """``n! / prod(nu_i!)``, the size of ``X_nu``."""
    count = math.factorial(nu.n)
    for p in nu.parts:
        count //= math.factorial(p)
    return count


def reading_multinomial_sum(kappa: Composition, nu: Composition) -> int:
    """Sum of ``n!/prod(eta_i!)`` over all margin matrices of the pair."""
    if kappa.n != nu.n:
        raise ValueError("degree mismatch")
    return backend.sum_reading_multinomials(nu.parts, kappa.parts, kappa.n)


def counting_identity_holds(kappa: Composition, nu: Composition) -> bool:
    """Reading-word multinomials must total ``|X_kappa| * |X_nu|``."""
    return (reading_multinomial_sum(kappa, nu)
            == left_rep_count(kappa) * left_rep_count(nu))


# ---------------------------------------------------------------------------
# structure constants and exports

def structure_constants(
        n: int, max_degree: int | None = None
) -> list[tuple[Composition, Composition, DescentElement]]:
    """Every ordered basis product, pairs in subset order."""
    limit = BASIS_DEGREE_MAX if max_degree is None else max_degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > limit:
        raise ValueError(
            f"degree {n} above bound {limit}; pass max_degree to override")
    comps = all_compositions(n)
    return [(kappa, nu, solomon_multiply(kappa, nu))
            for kappa in comps for nu in comps]


def write_structure_csv(rows: Iterable[tuple[Composition, Composition,
                                             DescentElement]],
                        fh: TextIO) -> None:
    """One CSV row per (kappa, nu, eta) coefficient."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["kappa", "nu", "eta", "coefficient"])
    for kappa, nu, product in rows:
        for eta, coeff in product.sorted_terms():
            writer.writerow([kappa.to_text(), nu.to_text(), eta.to_text(),
                             coeff])


def structure_records(n: int,
                      rows: Iterable[tuple[Composition, Composition,
                                           DescentElement]]) -> dict:
    """Nested record form of the table, for the structured text export."""
    return {
        "schema_version": STRUCTURE_SCHEMA_VERSION,
        "kind": "descent-algebra-products",
        "n": n,
        "products": [
            {
                "kappa": kappa.to_text(),
                "nu": nu.to_text(),
                "terms": [
                    {"eta": eta.to_text(), "coefficient": coeff}
                    for eta, coeff in product.sorted_terms()
                ],
            }
            for kappa, nu, product in rows
        ],
    }
