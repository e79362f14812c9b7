# -*- coding: utf-8 -*-
"""
Módulo de escalonamento ASAP em camadas alternadas.

O circuito vira uma sequência estritamente alternada de camadas de 1 qubit
(índices pares) e de 2 qubits (índices ímpares). Cada porta vai para a camada
mais cedo possível do seu tipo, depois de todas as camadas que contêm portas
anteriores nos mesmos qubits. A sequência sempre começa e termina com uma
camada de 1 qubit, que pode estar vazia.
"""

import logging
from dataclasses import dataclass

from circuits.circuit import Circuit, Gate

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

ONE_QUBIT_LAYER = "one_qubit"
TWO_QUBIT_LAYER = "two_qubit"


@dataclass(frozen=True)
class Layer:
    kind: str
    gates: tuple[Gate, ...]

    @property
    def is_two_qubit(self) -> bool:
        return self.kind == TWO_QUBIT_LAYER

    def qubits(self) -> frozenset[int]:
        return frozenset(q for g in self.gates for q in g.operands)

    def partners(self) -> dict[int, int]:
        """Mapa átomo -> parceiro de interação (apenas camadas de 2 qubits)."""
        partner = {}
        for gate in self.gates:
            a, b = gate.operands
            partner[a] = b
            partner[b] = a
        return partner

    def to_json(self) -> dict:
        return {"kind": self.kind, "gates": [g.to_dict() for g in self.gates]}


@dataclass(frozen=True)
class Schedule:
    layers: tuple[Layer, ...]

    @property
    def two_qubit_layers(self) -> tuple[Layer, ...]:
        return tuple(layer for layer in self.layers if layer.is_two_qubit)

    @property
    def max_gates_per_layer(self) -> int:
        return max((len(layer.gates) for layer in self.two_qubit_layers), default=0)

    def to_json(self) -> dict:
        return {"layers": [layer.to_json() for layer in self.layers]}


def schedule_asap(circuit: Circuit) -> Schedule:
    """
    Escalona o circuito ASAP em camadas alternadas 1Q/2Q.

    Args:
        circuit (Circuit): Circuito de entrada.

    Returns:
        Schedule: Camadas com índice par = 1 qubit e ímpar = 2 qubits.
    """
    front = [-1] * circuit.num_qubits
    buckets: dict[int, list[Gate]] = {}
    for gate in circuit.gates:
        if gate.is_cz:
            a, b = gate.operands
            f = max(front[a], front[b])
            index = 1 if f < 0 else (f + 1 if f % 2 == 0 else f + 2)
            front[a] = front[b] = index
        else:
            (q,) = gate.operands
            f = front[q]
            index = 0 if f < 0 else (f if f % 2 == 0 else f + 1)
            front[q] = index
        buckets.setdefault(index, []).append(gate)

    last = max(buckets, default=0)
    if last % 2 == 1:
        last += 1
    layers = tuple(
        Layer(TWO_QUBIT_LAYER if i % 2 else ONE_QUBIT_LAYER, tuple(buckets.get(i, ())))
        for i in range(last + 1)
    )
    schedule = Schedule(layers)
    logger.info(
        f"Escalonamento: {len(schedule.two_qubit_layers)} camadas 2Q, "
        f"máx. {schedule.max_gates_per_layer} portas por camada."
    )
    return schedule


if __name__ == "__main__":
    from circuits.generators import ising_chain

    s = schedule_asap(ising_chain(42))
    print(f"Camadas: {len(s.layers)} ({len(s.two_qubit_layers)} de 2 qubits)")
    print(f"Máximo de portas 2Q por camada: {s.max_gates_per_layer}")
