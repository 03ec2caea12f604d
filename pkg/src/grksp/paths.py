"""Path and k-shortest result types."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    length: float

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def sort_key(self) -> tuple[float, tuple[int, ...]]:
        return (self.length, self.vertices)


@dataclass(frozen=True)
class KspResult:
    """Up to ``k`` loop-less ``source -> target`` paths, best first.

    Paths are ordered by length, then lexicographically by vertex sequence.
    """

    source: int
    target: int
    k: int
    paths: tuple[Path, ...] = field(default_factory=tuple)

    @property
    def lengths(self) -> tuple[float, ...]:
        return tuple(p.length for p in self.paths)

    @property
    def sequences(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.vertices for p in self.paths)

    def __len__(self) -> int:
        return len(self.paths)


def has_loop(p: Path | Sequence[int]) -> bool:
    seq = p.vertices if isinstance(p, Path) else p
    return len(set(seq)) != len(seq)
