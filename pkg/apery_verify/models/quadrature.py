"""
Gauss-Legendre rule mapped to the unit interval.
"""
from dataclasses import dataclass
from typing import Any, Tuple


@dataclass(frozen=True)
class QuadratureRule:
    nodes: Tuple[Any, ...]
    weights: Tuple[Any, ...]
    degree: int

    @property
    def size(self) -> int:
        return len(self.nodes)

    def apply(self, f) -> Any:
        total = 0
        for x, w in zip(self.nodes, self.weights):
            total += w * f(x)
        return total
