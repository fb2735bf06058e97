from __future__ import annotations

from collections.abc import Mapping

from ..curve import Point


class DivisorSpec(Mapping):
    """Finite formal sum of rational points; zero multiplicities are dropped."""

    __slots__ = ("_data",)

    def __init__(self, data: Mapping | None = None):
        items = {}
        for P, n in (data or {}).items():
            if not isinstance(P, Point):
                raise TypeError(f"divisor support must be points, got {P!r}")
            n = int(n)
            if n:
                items[P] = n
        self._data = dict(sorted(items.items()))

    def __getitem__(self, P: Point) -> int:
        return self._data[P]

    def get(self, P, default=0):
        return self._data.get(P, default)

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._data == DivisorSpec(other)._data
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._data.items()))

    def __repr__(self) -> str:
        if not self._data:
            return "DivisorSpec(0)"
        return "DivisorSpec(" + " + ".join(f"{n}*{P}" for P, n in self._data.items()) + ")"

    @property
    def degree(self) -> int:
        return sum(self._data.values())

    @property
    def support(self) -> tuple[Point, ...]:
        return tuple(self._data)

    @property
    def is_effective(self) -> bool:
        return all(n > 0 for n in self._data.values())

    def __add__(self, other: Mapping) -> "DivisorSpec":
        out = dict(self._data)
        for P, n in other.items():
            out[P] = out.get(P, 0) + n
        return DivisorSpec(out)

    def __neg__(self) -> "DivisorSpec":
        return DivisorSpec({P: -n for P, n in self._data.items()})

    def __sub__(self, other: Mapping) -> "DivisorSpec":
        return self + (-DivisorSpec(other))

    def positive_part(self) -> "DivisorSpec":
        return DivisorSpec({P: n for P, n in self._data.items() if n > 0})

    def negative_part(self) -> "DivisorSpec":
        """The pole divisor, with positive multiplicities."""
        return DivisorSpec({P: -n for P, n in self._data.items() if n < 0})
