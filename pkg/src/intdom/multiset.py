"""Finite multisets over nonnegative integer ids.

A :class:`Multiset` maps each element to a positive multiplicity.  Elements
are dense integer ids; callers own the mapping from ids to vertices, so the
same type serves a graph, its factor graphs and their product.

Iteration is always in ascending id order.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class Multiset:
    """Immutable multiset of integer ids.

    ``Multiset([1, 2, 2])`` holds 1 once and 2 twice.  Use
    :meth:`from_counts` to build one from a ``{element: multiplicity}`` map.
    """

    __slots__ = ("_counts", "_size", "_hash")

    def __init__(self, elements: Iterable[int] = ()):
        counts: dict[int, int] = {}
        for e in elements:
            _check_element(e)
            counts[e] = counts.get(e, 0) + 1
        self._set(counts)

    def _set(self, counts: dict[int, int]) -> None:
        self._counts = dict(sorted(counts.items()))
        self._size = sum(self._counts.values())
        self._hash = None

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "Multiset":
        """Build from a multiplicity map; zero entries are dropped."""
        clean = {}
        for e, m in counts.items():
            _check_element(e)
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"multiplicity of {e} must be a nonnegative int, got {m!r}")
            if m:
                clean[e] = m
        ms = cls.__new__(cls)
        ms._set(clean)
        return ms

    @classmethod
    def _trusted(cls, counts: dict[int, int]) -> "Multiset":
        # counts already positive; skips validation on hot paths
        ms = cls.__new__(cls)
        ms._set(counts)
        return ms

    # -- counting -----------------------------------------------------------

    def count(self, a: int) -> int:
        """Number of occurrences of ``a`` (0 when absent)."""
        return self._counts.get(a, 0)

    def count_over_set(self, elements: Iterable[int]) -> int:
        """Total multiplicity over a plain set of elements."""
        get = self._counts.get
        return sum(get(b, 0) for b in set(elements))

    def cardinality(self) -> int:
        return self._size

    def __len__(self) -> int:
        return self._size

    # -- algebra ------------------------------------------------------------

    def union(self, other: "Multiset") -> "Multiset":
        """Additive union: multiplicities add."""
        counts = dict(self._counts)
        for e, m in other._counts.items():
            counts[e] = counts.get(e, 0) + m
        return Multiset._trusted(counts)

    __add__ = union

    def power_union(self, t: int) -> "Multiset":
        """Union of ``t`` copies of this multiset (``t >= 1``)."""
        if not isinstance(t, int) or t < 1:
            raise ValueError(f"power_union needs a positive integer, got {t!r}")
        return Multiset._trusted({e: m * t for e, m in self._counts.items()})

    def __mul__(self, t: int) -> "Multiset":
        return self.power_union(t)

    __rmul__ = __mul__

    def intersect(self, other: "Multiset") -> "Multiset":
        """Per-element minimum of multiplicities."""
        counts = {}
        for e, m in self._counts.items():
            low = min(m, other._counts.get(e, 0))
            if low:
                counts[e] = low
        return Multiset._trusted(counts)

    __and__ = intersect

    def is_submultiset(self, other: "Multiset") -> bool:
        """True when every multiplicity here is at most the one in ``other``."""
        get = other._counts.get
        return all(m <= get(e, 0) for e, m in self._counts.items())

    __le__ = is_submultiset

    def restrict(self, elements: Iterable[int]) -> "Multiset":
        keep = set(elements)
        return Multiset._trusted({e: m for e, m in self._counts.items() if e in keep})

    def remove_one(self, a: int) -> "Multiset":
        """Copy with one occurrence of ``a`` removed."""
        if a not in self._counts:
            raise KeyError(a)
        counts = dict(self._counts)
        counts[a] -= 1
        if not counts[a]:
            del counts[a]
        return Multiset._trusted(counts)

    # -- views --------------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        return list(self._counts.items())

    def support(self) -> list[int]:
        return list(self._counts)

    def elements(self) -> list[int]:
        """Sorted element list with repetition."""
        return [e for e, m in self._counts.items() for _ in range(m)]

    def max_multiplicity(self) -> int:
        return max(self._counts.values(), default=0)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def __contains__(self, a: object) -> bool:
        return a in self._counts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._counts.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements()) + "}"

    def __repr__(self) -> str:
        return f"Multiset({self})"


def _check_element(e: object) -> None:
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise ValueError(f"multiset elements must be nonnegative ints, got {e!r}")


def parse_multiset(text: str) -> Multiset:
    """Inverse of ``str(Multiset)``: ``"{1,2,2}"`` -> Multiset([1, 2, 2])."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"not a multiset literal: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return Multiset()
    return Multiset(int(tok) for tok in body.split(","))
