# -*- coding: utf-8 -*-
"""
Módulo de benchmark: comparação entre posicionadores e varredura de parâmetros.

Funcionalidades:
- Rodar o posicionador ciente de roteamento e o de base sobre o mesmo
  escalonamento e as mesmas marcas de reuso, circuito a circuito.
- Calcular as variações relativas de passos e de tempo de rearranjo.
- Varrer uma grade de α/β/γ/δ e resumir passos, tempo e tempo de colocação.
- Preparar tabelas (pandas) e registros JSON dos relatórios.
"""

import itertools
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from analysis.reuse import analyze_reuse
from analysis.scheduling import schedule_asap
from architecture.zones import Architecture
from circuits.circuit import Circuit, load_circuit
from compilation.pipeline import ZonedCompiler
from codegen.program import Metrics
from optimization.options import PlacerParams
from utils.exceptions import CompilerError
from utils.helpers import relative_delta_percent, stable_hash

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

CIRCUIT_SUFFIXES = (".qasm", ".json")
WALL_CLOCK_FIELDS = ("placement_time_ms", "routing_time_ms")


@dataclass
class RunReport:
    benchmark: str
    qubits: int = 0
    two_qubit_gates: int = 0
    layers: int = 0
    max_gates_per_layer: int = 0
    schedule_hash: str = ""
    aware: Metrics | None = None
    agnostic: Metrics | None = None
    error: dict | None = None

    @property
    def delta_steps_pct(self) -> int | None:
        if self.aware is None or self.agnostic is None:
            return None
        return relative_delta_percent(self.aware.rearrangement_steps, self.agnostic.rearrangement_steps)

    @property
    def delta_time_pct(self) -> int | None:
        if self.aware is None or self.agnostic is None:
            return None
        return relative_delta_percent(self.aware.rearrangement_time_ms, self.agnostic.rearrangement_time_ms)

    def to_dict(self, include_wall_clock: bool = True) -> dict:
        def metrics(m: Metrics | None):
            if m is None:
                return None
            payload = m.to_dict()
            if not include_wall_clock:
                for key in WALL_CLOCK_FIELDS:
                    payload.pop(key, None)
            return payload

        return {
            "benchmark": self.benchmark,
            "qubits": self.qubits,
            "two_qubit_gates": self.two_qubit_gates,
            "layers": self.layers,
            "max_gates_per_layer": self.max_gates_per_layer,
            "schedule_hash": self.schedule_hash,
            "aware": metrics(self.aware),
            "agnostic": metrics(self.agnostic),
            "delta_steps_pct": self.delta_steps_pct,
            "delta_time_pct": self.delta_time_pct,
            "error": self.error,
        }


def load_circuit_set(path: str | Path) -> list[tuple[str, Circuit | CompilerError]]:
    """
    Lê um arquivo de circuito ou todos os circuitos (.qasm/.json) de um diretório, em ordem de nome.

    Erros de leitura de um circuito são devolvidos no lugar do circuito para que a execução continue.
    """
    path = Path(path)
    files = sorted(p for p in path.iterdir() if p.suffix.lower() in CIRCUIT_SUFFIXES) if path.is_dir() else [path]
    entries = []
    for file in files:
        try:
            entries.append((file.stem, load_circuit(file)))
        except CompilerError as e:
            logger.warning(f"Circuito '{file.name}' ignorado: {e}")
            entries.append((file.stem, e))
    return entries


def compare_circuit(name: str, circuit: Circuit, arch: Architecture, params: PlacerParams) -> RunReport:
    """Compila um circuito com os dois posicionadores sobre o mesmo escalonamento e as mesmas marcas de reuso."""
    schedule = schedule_asap(circuit)
    reuse = analyze_reuse(schedule)
    digest = stable_hash({"schedule": schedule.to_json(), "reuse": reuse.to_json()})

    aware = ZonedCompiler(arch, params, "aware").compile(circuit, schedule, reuse)
    agnostic = ZonedCompiler(arch, params, "baseline").compile(circuit, schedule, reuse)
    for result in (aware, agnostic):
        if stable_hash({"schedule": result.schedule.to_json(), "reuse": result.reuse.to_json()}) != digest:
            raise CompilerError("Os posicionadores receberam escalonamentos diferentes.")

    return RunReport(
        benchmark=name,
        qubits=circuit.num_qubits,
        two_qubit_gates=circuit.two_qubit_gates,
        layers=len(schedule.two_qubit_layers),
        max_gates_per_layer=schedule.max_gates_per_layer,
        schedule_hash=digest,
        aware=aware.metrics,
        agnostic=agnostic.metrics,
    )


def compare(entries, arch: Architecture, params: PlacerParams) -> list[RunReport]:
    """
    Compara os posicionadores em um conjunto de circuitos.

    Args:
        entries: Lista de (nome, Circuit ou erro de leitura).
        arch (Architecture): Arquitetura alvo.
        params (PlacerParams): Parâmetros do posicionador ciente de roteamento.

    Returns:
        list[RunReport]: Um relatório por circuito; falhas ficam registradas em `error`.
    """
    reports = []
    for name, circuit in entries:
        if isinstance(circuit, CompilerError):
            reports.append(RunReport(benchmark=name, error=circuit.to_dict()))
            continue
        try:
            report = compare_circuit(name, circuit, arch, params)
        except CompilerError as e:
            logger.warning(f"Falha ao comparar '{name}': {e}")
            report = RunReport(benchmark=name, qubits=circuit.num_qubits, error=e.to_dict())
        reports.append(report)
        logger.info(f"Benchmark '{name}' concluído.")
    return reports


def report_frame(reports: list[RunReport]) -> pd.DataFrame:
    """Tabela no formato de comparação: passos, tempo de rearranjo e tempos de colocação/roteamento."""
    rows = []
    for r in reports:
        ok = r.aware is not None and r.agnostic is not None
        rows.append(
            {
                "Benchmark": r.benchmark,
                "Qubits": r.qubits,
                "2Q Gates": r.two_qubit_gates,
                "2Q Layers": r.layers,
                "Max. 2Q-Gates in Layer": r.max_gates_per_layer,
                "Steps (agnostic)": r.agnostic.rearrangement_steps if ok else np.nan,
                "Steps (aware)": r.aware.rearrangement_steps if ok else np.nan,
                "Steps Δ%": r.delta_steps_pct,
                "Rearr. Time ms (agnostic)": r.agnostic.rearrangement_time_ms if ok else np.nan,
                "Rearr. Time ms (aware)": r.aware.rearrangement_time_ms if ok else np.nan,
                "Time Δ%": r.delta_time_pct,
                "Place. ms (aware)": r.aware.placement_time_ms if ok else np.nan,
                "Rout. ms (aware)": r.aware.routing_time_ms if ok else np.nan,
                "Error": r.error["kind"] if r.error else "",
            }
        )
    return pd.DataFrame(rows)


def format_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(nenhum benchmark)"
    return frame.to_string(index=False, float_format=lambda v: f"{v:.3f}")


def paramscan(entries, arch: Architecture, grid: dict, base: PlacerParams | None = None) -> pd.DataFrame:
    """
    Varre uma grade de parâmetros com o posicionador ciente de roteamento.

    Args:
        entries: Lista de (nome, Circuit ou erro de leitura).
        arch (Architecture): Arquitetura alvo.
        grid (dict): {"alpha": [...], "beta": [...], "gamma": [...], "delta": [...]};
                     parâmetros ausentes usam o valor de `base`.
        base (PlacerParams, optional): Parâmetros de partida.

    Returns:
        pd.DataFrame: Uma linha por combinação com passos e tempo somados e tempo médio de colocação.
    """
    base = base or PlacerParams()
    names = ("alpha", "beta", "gamma", "delta")
    axes = [grid.get(n) or [getattr(base, n)] for n in names]
    circuits = [(name, c) for name, c in entries if isinstance(c, Circuit)]
    rows = []
    for combo in itertools.product(*axes):
        params = base.with_overrides(**dict(zip(names, combo)))
        steps, time_ms, placement_ms, failures = 0, 0.0, [], 0
        for name, circuit in circuits:
            try:
                metrics = ZonedCompiler(arch, params, "aware").compile(circuit).metrics
            except CompilerError as e:
                logger.warning(f"Falha em '{name}' com {dict(zip(names, combo))}: {e}")
                failures += 1
                continue
            steps += metrics.rearrangement_steps
            time_ms += metrics.rearrangement_time_ms
            placement_ms.append(metrics.placement_time_ms)
        rows.append(
            {
                **dict(zip(names, combo)),
                "rearrangement_steps": steps,
                "rearrangement_time_ms": time_ms,
                "mean_placement_time_ms": float(np.mean(placement_ms)) if placement_ms else 0.0,
                "failures": failures,
            }
        )
        logger.info(f"Combinação {dict(zip(names, combo))} concluída.")
    return pd.DataFrame(rows, columns=[*names, "rearrangement_steps", "rearrangement_time_ms", "mean_placement_time_ms", "failures"])
