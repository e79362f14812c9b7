# -*- coding: utf-8 -*-
"""
Geração de código e modelo de tempo.

Intercala as camadas de 1 qubit, os passos de rearranjo (captura, movimento,
soltura) e um pulso de Rydberg por camada 2Q, numa sequência plana de
instruções. Calcula também as métricas reportadas:
- tempo de movimento t = √(d / a), com d em metros e a aceleração da arquitetura;
- tempo de passo = transferências · tempo de transferência + movimento na distância máxima.
"""

import logging
from dataclasses import asdict, dataclass, field

import numpy as np

from analysis.scheduling import Schedule
from architecture.zones import Architecture
from routing.router import RearrangementStep, Route
from optimization.placement import Placement
from utils.exceptions import ContractViolation, CoverageError

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

ONE_QUBIT_BATCH = "one_qubit_batch"
PICKUP = "pickup"
MOVE = "move"
DROP = "drop"
RYDBERG_PULSE = "rydberg_pulse"


@dataclass(frozen=True)
class Instruction:
    kind: str
    payload: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.payload}


@dataclass(frozen=True)
class Metrics:
    """Métricas do programa. Tempos físicos e de relógio em ms."""

    placement_time_ms: float = 0.0
    routing_time_ms: float = 0.0
    rearrangement_steps: int = 0
    rearrangement_time_ms: float = 0.0
    trap_transfers: int = 0
    placement_cost: float = 0.0
    gate_time_ms: float = 0.0
    execution_time_ms: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Program:
    instructions: tuple[Instruction, ...]
    per_step_times_us: tuple[float, ...]
    metrics: Metrics
    initial_positions: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "instructions": [i.to_json() for i in self.instructions],
            "per_step_times_us": list(self.per_step_times_us),
            "metrics": self.metrics.to_dict(),
        }

    def animation_trace(self) -> list[dict]:
        """Para cada instrução, o mapa completo átomo -> (x, y) em µm depois dela."""
        positions = dict(self.initial_positions)
        frames = []
        for index, instruction in enumerate(self.instructions):
            if instruction.kind == MOVE:
                for atom, target in instruction.payload["targets"].items():
                    positions[int(atom)] = tuple(target)
            frames.append(
                {
                    "index": index,
                    "kind": instruction.kind,
                    "positions": {str(a): list(p) for a, p in sorted(positions.items())},
                }
            )
        return frames


def movement_time(d: float, arch: Architecture) -> float:
    """Duração (s) de um movimento de `d` µm: √(d / aceleração), com d em metros."""
    if d < 0:
        raise ContractViolation(f"Distância negativa: {d}.")
    return float(np.sqrt(d * 1e-6 / arch.acceleration))


def step_time(step: RearrangementStep, arch: Architecture) -> float:
    """Duração (µs) de um passo: transferências · tempo de transferência + movimento na distância máxima."""
    return step.transfers * arch.trap_transfer_time + movement_time(step.max_dist, arch) * 1e6


def emit(
    schedule: Schedule,
    placements: list[Placement],
    routes: list[Route],
    arch: Architecture,
    placement_time_ms: float = 0.0,
    routing_time_ms: float = 0.0,
) -> Program:
    """
    Monta o programa final.

    Args:
        schedule (Schedule): Camadas alternadas 1Q/2Q.
        placements (list[Placement]): [inicial, portas_1, intermediária_1, portas_2, ...].
        routes (list[Route]): `routes[i]` leva `placements[i]` a `placements[i + 1]`.
        arch (Architecture): Arquitetura (constantes de tempo).
        placement_time_ms (float): Tempo de relógio gasto na colocação.
        routing_time_ms (float): Tempo de relógio gasto no roteamento.

    Returns:
        Program: Instruções, tempos por passo e métricas.
    """
    two_qubit = len(schedule.two_qubit_layers)
    if len(placements) != 2 * two_qubit + 1:
        raise CoverageError(f"Esperadas {2 * two_qubit + 1} colocações, recebidas {len(placements)}.")
    if len(routes) != 2 * two_qubit or any(r is None for r in routes):
        raise CoverageError(f"Esperadas {2 * two_qubit} rotas, recebidas {len([r for r in routes if r is not None])}.")

    instructions: list[Instruction] = []
    per_step: list[float] = []
    gate_time_us = 0.0
    steps = transfers = 0

    def emit_route(route: Route):
        nonlocal steps, transfers
        for step in route.steps:
            for batch in step.pickup_batches:
                instructions.append(Instruction(PICKUP, {"atoms": sorted(batch)}))
            instructions.append(
                Instruction(
                    MOVE,
                    {
                        "displacements": {
                            str(m.atom): [round(m.dst[0] - m.src[0], 6), round(m.dst[1] - m.src[1], 6)]
                            for m in step.movements
                        },
                        "targets": {str(m.atom): list(m.dst) for m in step.movements},
                        "duration_us": movement_time(step.max_dist, arch) * 1e6,
                    },
                )
            )
            for batch in step.drop_batches:
                instructions.append(Instruction(DROP, {"atoms": sorted(batch)}))
            per_step.append(step_time(step, arch))
            steps += 1
            transfers += step.transfers

    k = 0
    for layer in schedule.layers:
        if not layer.is_two_qubit:
            if layer.gates:
                instructions.append(Instruction(ONE_QUBIT_BATCH, {"gates": [g.to_dict() for g in layer.gates]}))
                gate_time_us += arch.one_qubit_gate_time_us
            continue
        emit_route(routes[2 * k])
        instructions.append(Instruction(RYDBERG_PULSE, {"layer": k, "gates": [list(g.operands) for g in layer.gates]}))
        gate_time_us += arch.rydberg_time_us
        emit_route(routes[2 * k + 1])
        k += 1

    rearrangement_ms = sum(per_step) / 1000
    gate_ms = gate_time_us / 1000
    metrics = Metrics(
        placement_time_ms=placement_time_ms,
        routing_time_ms=routing_time_ms,
        rearrangement_steps=steps,
        rearrangement_time_ms=rearrangement_ms,
        trap_transfers=transfers,
        placement_cost=float(sum(max(0.0, p.cost) for p in placements[1:])),
        gate_time_ms=gate_ms,
        execution_time_ms=rearrangement_ms + (gate_ms if arch.include_gate_times else 0.0),
    )
    initial = {a: arch.trap_position(t) for a, t in placements[0].assignment.items()}
    logger.info(f"Programa emitido: {len(instructions)} instruções, {steps} passos, {rearrangement_ms:.3f} ms de rearranjo.")
    return Program(tuple(instructions), tuple(per_step), metrics, initial)
