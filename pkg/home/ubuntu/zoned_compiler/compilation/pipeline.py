# -*- coding: utf-8 -*-
"""
Pipeline completo de compilação.

Escalonamento ASAP -> análise de reuso -> colocação camada a camada (ciente de
roteamento ou de base) -> roteamento de cada transição -> geração de código.
"""

import logging
import time
from dataclasses import dataclass

from analysis.reuse import ReuseMarks, analyze_reuse
from analysis.scheduling import Schedule, schedule_asap
from architecture.zones import Architecture
from circuits.circuit import Circuit
from codegen.program import Metrics, Program, emit
from optimization.baseline import place_baseline
from optimization.cost import NextLayerInfo
from optimization.options import PlacerParams
from optimization.placement import Placement, place_initial
from optimization.routing_aware import RoutingAwarePlacer
from routing.router import Route, route_transition
from utils.exceptions import ContractViolation

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

PLACERS = ("aware", "baseline")


@dataclass(frozen=True)
class CompilationResult:
    circuit: Circuit
    schedule: Schedule
    reuse: ReuseMarks
    placements: tuple[Placement, ...]
    routes: tuple[Route, ...]
    program: Program

    @property
    def metrics(self) -> Metrics:
        return self.program.metrics

    def groups_dump(self) -> list[dict]:
        return [{"transition": i, "groups": r.groups.to_json()} for i, r in enumerate(self.routes)]


class ZonedCompiler:
    """Compilador para arquiteturas zonadas de átomos neutros."""

    def __init__(self, arch: Architecture, params: PlacerParams | None = None, placer: str = "aware"):
        """
        Args:
            arch (Architecture): Arquitetura alvo.
            params (PlacerParams, optional): Parâmetros do posicionador (perfil qasmbench se None).
            placer (str): "aware" (A* ciente de roteamento) ou "baseline" (guloso por distância).
        """
        if placer not in PLACERS:
            raise ContractViolation(f"Posicionador desconhecido: '{placer}'. Use um de {PLACERS}.")
        self.arch = arch
        self.params = params or PlacerParams()
        self.placer = placer
        self._aware = RoutingAwarePlacer(arch, self.params)

    def compile(
        self,
        circuit: Circuit,
        schedule: Schedule | None = None,
        reuse: ReuseMarks | None = None,
        initial: Placement | None = None,
    ) -> CompilationResult:
        """
        Compila um circuito.

        Args:
            circuit (Circuit): Circuito validado.
            schedule (Schedule, optional): Escalonamento pronto (ASAP se None).
            reuse (ReuseMarks, optional): Marcas de reuso (calculadas do escalonamento se None).
            initial (Placement, optional): Colocação de partida; se None, todos os átomos vão para
                                           o armazenamento com `place_initial`.

        Returns:
            CompilationResult: Colocações, rotas e o programa emitido.
        """
        if initial is not None and set(initial.assignment) != set(range(circuit.num_qubits)):
            raise ContractViolation(
                f"A colocação de partida cobre {len(initial.assignment)} átomos; o circuito tem {circuit.num_qubits} qubits."
            )
        schedule = schedule or schedule_asap(circuit)
        reuse = reuse or analyze_reuse(schedule)
        layers = schedule.two_qubit_layers

        start = time.perf_counter()
        placements = [initial if initial is not None else place_initial(circuit.num_qubits, self.arch)]
        for k, layer in enumerate(layers):
            prev = placements[-1]
            partners = layers[k + 1].partners() if k + 1 < len(layers) else {}
            marked = reuse.marked(k)
            gate = self._place_gate(prev, layer, NextLayerInfo(partners, marked, dict(prev.assignment)))
            intermediate = self._place_intermediate(gate, NextLayerInfo(partners, marked, dict(gate.assignment)))
            placements += [gate, intermediate]
            logger.info(f"Camada {k + 1}/{len(layers)} posicionada ({self.placer}).")
        placement_ms = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        routes = [route_transition(a, b, self.arch) for a, b in zip(placements, placements[1:])]
        routing_ms = (time.perf_counter() - start) * 1000

        program = emit(schedule, placements, routes, self.arch, placement_ms, routing_ms)
        return CompilationResult(circuit, schedule, reuse, tuple(placements), tuple(routes), program)

    def _place_gate(self, prev, layer, info) -> Placement:
        if self.placer == "baseline":
            return place_baseline(prev, layer, info, self.arch, self.params)
        return self._aware.place_gate_layer(prev, layer, info)

    def _place_intermediate(self, prev, info) -> Placement:
        if self.placer == "baseline":
            return place_baseline(prev, None, info, self.arch, self.params)
        return self._aware.place_intermediate(prev, info)
