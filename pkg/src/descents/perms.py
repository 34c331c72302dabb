"""Permutations of ``{1..n}`` and the sparse integer group algebra over them.

Permutations are kept in one-line notation: ``Permutation((3, 1, 2))`` sends
1 to 3, 2 to 1 and 3 to 2.  Composition applies the right factor first:
``(x * y)(i) = x(y(i))``.

>>> x = Permutation.from_text("132")
>>> y = Permutation.from_text("213")
>>> (x * y).to_text()
'312'
>>> Permutation.from_text("312").inverse().to_text()
'231'
>>> Permutation.from_text("312").length()
2
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from . import backend

#: Largest degree at which whole-group (order n!) computations run without
#: an explicit override.
ORACLE_DEGREE_DEFAULT = 7

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_coefficient(value: int) -> int:
    """Return ``value`` unchanged, or raise if it leaves signed 64-bit range."""
    if value < INT64_MIN or value > INT64_MAX:
        raise OverflowError("coefficient exceeds signed 64-bit range")
    return value


class Permutation:
    """An element of the symmetric group S_n, immutable and hashable."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n < 1:
                raise ValueError("degree must be at least 1")
            if sorted(images) != list(range(1, n + 1)):
                raise ValueError(f"not a permutation of 1..{n}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls(range(1, n + 1), check=False)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse one-line text: digits for n <= 9 ("312"), else comma-separated.

        >>> Permutation.from_text("10,3,1,2,4,5,6,7,8,9").n
        10
        """
        text = text.strip()
        if not text:
            raise ValueError("empty permutation text")
        if "," in text:
            images = [int(part) for part in text.split(",")]
        else:
            if not text.isdigit() or "0" in text:
                raise ValueError(f"bad permutation text: {text!r}")
            images = [int(ch) for ch in text]
        return cls(images)

    def to_text(self) -> str:
        """Inverse of :meth:`from_text`; comma-free only fits n <= 9."""
        if self.n <= 9:
            return "".join(str(v) for v in self.images)
        return ",".join(str(v) for v in self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"argument {i} outside 1..{self.n}")
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different degree")
        images = self.images
        return Permutation(tuple(images[v - 1] for v in other.images),
                           check=False)

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.images):
            out[v - 1] = i + 1
        return Permutation(out, check=False)

    def length(self) -> int:
        """Coxeter length = number of inversions."""
        images = self.images
        n = self.n
        return sum(1 for h in range(n) for l in range(h + 1, n)
                   if images[l] < images[h])

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({self.to_text()!r})"


def enumerate_group(n: int, max_degree: int | None = None) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order.

    Refuses degrees above :data:`ORACLE_DEGREE_DEFAULT` unless ``max_degree``
    raises the bound explicitly; the order of the group grows as n!.
    """
    limit = ORACLE_DEGREE_DEFAULT if max_degree is None else max_degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > limit:
        raise ValueError(
            f"degree {n} above bound {limit}; pass max_degree to override")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images, check=False)


class GroupAlgebraElement:
    """A finite integer combination of equal-degree permutations.

    ``terms`` maps :class:`Permutation` to a non-zero signed 64-bit
    coefficient.  Treat it as read-only.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int,
                 terms: Mapping[Permutation, int] | None = None,
                 check: bool = True):
        clean: dict[Permutation, int] = {}
        if terms:
            for perm, coeff in terms.items():
                if check:
                    if not isinstance(perm, Permutation):
                        raise ValueError("terms must be keyed by Permutation")
                    if perm.n != n:
                        raise ValueError(
                            f"degree mismatch: element of S_{n} cannot hold "
                            f"a permutation of degree {perm.n}")
                    check_coefficient(coeff)
                if coeff:
                    clean[perm] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupAlgebraElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n)

    @classmethod
    def from_permutation(cls, perm: Permutation,
                         coeff: int = 1) -> "GroupAlgebraElement":
        return cls(perm.n, {perm: coeff})

    def coefficient(self, perm: Permutation) -> int:
        return self.terms.get(perm, 0)

    def support(self) -> list[Permutation]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _combine(self, other: "GroupAlgebraElement",
                 sign: int) -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("degree mismatch")
        terms = dict(self.terms)
        for perm, coeff in other.terms.items():
            terms[perm] = check_coefficient(terms.get(perm, 0) + sign * coeff)
        return GroupAlgebraElement(self.n, terms, check=False)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return GroupAlgebraElement(
            self.n, {p: -c for p, c in self.terms.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return algebra_multiply(self, other)
        if isinstance(other, int):
            return GroupAlgebraElement(
                self.n,
                {p: check_coefficient(c * other) for p, c in self.terms.items()},
                check=False)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupAlgebraElement)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        parts = [f"{c}*{p.to_text()}" for p, c in
                 sorted(self.terms.items(), key=lambda t: t[0].images)]
        if len(parts) > 8:
            parts = parts[:8] + [f"... ({len(self.terms)} terms)"]
        body = " + ".join(parts) if parts else "0"
        return f"GroupAlgebraElement({self.n}, {body})"


def algebra_multiply(a: GroupAlgebraElement,
                     b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear product; the hot loop lives in the kernel backend."""
    if a.n != b.n:
        raise ValueError("degree mismatch")
    a_items = [(p.images, c) for p, c in a.terms.items()]
    b_items = [(p.images, c) for p, c in b.terms.items()]
    raw = backend.convolve(a.n, a_items, b_items)
    terms = {Permutation(img, check=False): c for img, c in raw.items()}
    return GroupAlgebraElement(a.n, terms, check=False)
