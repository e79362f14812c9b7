# -*- coding: utf-8 -*-
"""
Análise de reuso entre camadas consecutivas de 2 qubits.

Um átomo que participa de duas camadas 2Q consecutivas pode permanecer na zona
de emaranhamento. Portas de 1 qubit entre as duas camadas não bloqueiam a
marcação: o reuso é apenas uma opção que o posicionador pode recusar.
"""

from dataclasses import dataclass

from analysis.scheduling import Schedule

__version__ = "0.0.1"


@dataclass(frozen=True)
class ReuseMarks:
    """`boundaries[i]` = átomos reutilizáveis entre a i-ésima e a (i+1)-ésima camada 2Q."""

    boundaries: tuple[frozenset[int], ...]

    def marked(self, boundary: int) -> frozenset[int]:
        if 0 <= boundary < len(self.boundaries):
            return self.boundaries[boundary]
        return frozenset()

    def to_json(self) -> list[list[int]]:
        return [sorted(b) for b in self.boundaries]


def analyze_reuse(schedule: Schedule) -> ReuseMarks:
    layers = schedule.two_qubit_layers
    return ReuseMarks(tuple(layers[i].qubits() & layers[i + 1].qubits() for i in range(len(layers) - 1)))
