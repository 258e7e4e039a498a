"""Connection sets and circulant graphs on Z_n.

A connection set is stored as its full symmetric element list, sorted
ascending. The generator half-set is derived on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class ConnectionSet:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"order must be >= 2, got {self.n}")
        elems = tuple(self.elements)
        if list(elems) != sorted(set(elems)):
            raise ValueError("elements must be strictly increasing")
        for a in elems:
            if not 1 <= a <= self.n - 1:
                raise ValueError(f"residue {a} outside 1..{self.n - 1}")
        members = set(elems)
        for a in elems:
            if self.n - a not in members:
                raise ValueError(f"set is not closed under negation: {a} present, {self.n - a} missing")
        object.__setattr__(self, "elements", elems)

    @property
    def generators(self) -> tuple[int, ...]:
        """Elements a with 1 <= a <= (n-1)/2; never includes n/2."""
        return tuple(a for a in self.elements if 2 * a < self.n)

    @property
    def s(self) -> int:
        return len(self.generators)

    @property
    def has_half(self) -> bool:
        return self.n % 2 == 0 and self.n // 2 in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def to_dict(self) -> dict:
        return {"n": self.n, "set": list(self.elements)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "ConnectionSet":
        return cls(int(d["n"]), tuple(sorted(int(a) for a in d["set"])))

    @classmethod
    def from_json(cls, text: str) -> "ConnectionSet":
        return cls.from_dict(json.loads(text))


def make_connection_set(n: int, generators: Iterable[int]) -> ConnectionSet:
    """Symmetric closure of ``generators`` in Z_n."""
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    closed = set()
    for a in generators:
        a = int(a)
        if not 1 <= a <= n - 1:
            raise ValueError(f"generator {a} outside 1..{n - 1}")
        closed.add(a)
        closed.add(n - a)
    return ConnectionSet(n, tuple(sorted(closed)))


def complement_shift_set(cs: ConnectionSet) -> ConnectionSet:
    """Map every generator a of a set on n = 2k vertices to k - a.

    The result is again symmetric; applying the map twice returns ``cs``.
    """
    if cs.n % 2:
        raise ValueError(f"complement shift needs even order, got n={cs.n}")
    k = cs.n // 2
    if cs.has_half:
        raise ValueError(f"generator {k} = n/2 is not allowed (need 1 <= a <= k-1)")
    return make_connection_set(cs.n, (k - a for a in cs.generators))


@dataclass(frozen=True)
class CirculantGraph:
    connection_set: ConnectionSet

    @property
    def n(self) -> int:
        return self.connection_set.n

    @property
    def degree(self) -> int:
        return len(self.connection_set)

    @property
    def elements(self) -> tuple[int, ...]:
        return self.connection_set.elements

    @property
    def generators(self) -> tuple[int, ...]:
        return self.connection_set.generators

    def adjacent(self, i: int, j: int) -> bool:
        return (j - i) % self.n in self.connection_set

    def first_row(self) -> list[int]:
        row = [0] * self.n
        for a in self.elements:
            row[a] = 1
        return row

    def adjacency_matrix(self) -> list[list[int]]:
        first = self.first_row()
        n = self.n
        return [[first[(j - i) % n] for j in range(n)] for i in range(n)]

    def to_dict(self) -> dict:
        return self.connection_set.to_dict()

    def __str__(self):
        return f"C_{self.n}({', '.join(map(str, self.elements))})"


def circulant(n: int, generators: Iterable[int]) -> CirculantGraph:
    return CirculantGraph(make_connection_set(n, generators))


def as_graph(obj) -> CirculantGraph:
    if isinstance(obj, CirculantGraph):
        return obj
    if isinstance(obj, ConnectionSet):
        return CirculantGraph(obj)
    raise TypeError(f"expected a CirculantGraph or ConnectionSet, got {type(obj).__name__}")
