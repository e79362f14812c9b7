# -*- coding: utf-8 -*-
"""
Função de custo e heurísticas da busca de colocação.

- `cost`: soma sobre os grupos de √d_max (µm), proxy do tempo de rearranjo.
- `total_cost`: custo + custos de reuso (sem peso) + α · custos de antecipação.
- `heuristic_admissible`: limite inferior do aumento de custo ainda por vir.
- `heuristic_accelerating`: acrescenta δ·(β + Σ SD dos grupos)·itens restantes,
  preferindo rearranjos "paralelos" e nós mais profundos.
- `heuristic_full`: acrescenta a média dos custos de antecipação das opções de
  cada item ainda não colocado.
"""

from dataclasses import dataclass, field

import numpy as np

from architecture.zones import Architecture, TrapAddress, ZoneKind
from optimization.compatibility import GroupSet
from utils.exceptions import ContractViolation

__version__ = "0.0.1"

REUSE = "reuse"


@dataclass(frozen=True)
class NextLayerInfo:
    """
    Dados da próxima camada 2Q usados nos custos de antecipação.

    Attributes:
        partners (dict[int, int]): átomo -> parceiro na próxima camada 2Q.
        marked (frozenset[int]): átomos marcados para reuso na fronteira atual.
        current (dict[int, TrapAddress]): armadilha atual de cada átomo.
    """

    partners: dict = field(default_factory=dict)
    marked: frozenset = field(default_factory=frozenset)
    current: dict = field(default_factory=dict)


def cost(groups: GroupSet) -> float:
    return groups.cost()


def lookahead_cost_gate(gate: tuple[int, int], targets: dict, info: NextLayerInfo, arch: Architecture) -> float:
    """
    Custo de antecipação de uma porta colocada.

    Para cada átomo da porta que será reutilizado na próxima camada, soma √ da
    distância do parceiro seguinte (posição atual) até a armadilha vizinha ao átomo.
    É 0 se o parceiro seguinte é o próprio companheiro de porta.
    """
    total = 0.0
    for atom in gate:
        if atom not in info.marked:
            continue
        partner = info.partners.get(atom)
        if partner is None or partner in gate:
            continue
        total += float(np.sqrt(arch.distance(info.current[partner], targets[atom].partner())))
    return total


def lookahead_cost_atom(atom: int, option, info: NextLayerInfo, gamma: float, arch: Architecture) -> float:
    """
    Custo de antecipação de uma opção de um átomo na colocação intermediária.

    Args:
        atom (int): Átomo.
        option: `REUSE` ou a armadilha de armazenamento candidata.
        info (NextLayerInfo): Dados da próxima camada.
        gamma (float): Bônus de reuso.
        arch (Architecture): Arquitetura.

    Returns:
        float: Para reuso, √(distância do parceiro à armadilha vizinha) − γ (pode ser negativo).
               Para armazenamento, √(distância do parceiro à armadilha candidata), ou 0 sem próxima porta.
    """
    partner = info.partners.get(atom)
    if option == REUSE:
        if atom not in info.marked or partner is None:
            raise ContractViolation(f"Opção de reuso pedida para o átomo {atom}, que não está marcado.")
        adjacent = info.current[atom].partner()
        return float(np.sqrt(arch.distance(info.current[partner], adjacent))) - gamma
    if partner is None:
        return 0.0
    return float(np.sqrt(arch.distance(info.current[partner], option)))


def total_cost(node, params) -> float:
    return node.groups.cost() + node.reuse_sum + params.alpha * node.lookahead_sum


def heuristic_admissible(node, unplaced_dmin) -> float:
    """max(0, max √d_min dos itens restantes − max √d_max dos grupos); 0 sem itens restantes."""
    dmin = list(unplaced_dmin)
    if not dmin:
        return 0.0
    return max(0.0, float(np.sqrt(max(dmin))) - node.groups.max_sqrt_d_max())


def heuristic_accelerating(h: float, node, unplaced_count: int, params, scale: tuple[float, float] = (1.0, 1.0)) -> float:
    if unplaced_count == 0 or params.delta == 0:
        return h
    return h + params.delta * (params.beta + node.groups.sd_sum(scale)) * unplaced_count


def mean_option_lookahead(options, alpha: float) -> float:
    """Média de (custo de reuso + α · custo de antecipação) sobre as opções de um item."""
    values = [reuse + alpha * lookahead for reuse, lookahead in options]
    return float(np.mean(values)) if values else 0.0


def heuristic_full(h_acc: float, lookahead_means) -> float:
    return h_acc + float(sum(lookahead_means))


def scale_factors(source_positions, arch: Architecture, target_kind: ZoneKind) -> tuple[float, float]:
    """
    Fatores de escala (linhas, colunas) aplicados às chaves discretas no cálculo do SD.

    Por eixo: (linhas da zona de destino cobertas pela extensão física das origens)
    dividido pelo número de linhas discretas de origem, nunca abaixo de 1 (chaves distintas
    ocupam linhas de destino distintas); 1 se houver uma única linha.
    """
    positions = np.asarray(list(source_positions), dtype=float).reshape(-1, 2)
    if len(positions) == 0:
        return 1.0, 1.0
    target_ys, target_xs = arch.lattice_lines(target_kind)
    factors = []
    for axis, lines in ((1, target_ys), (0, target_xs)):
        coords = np.unique(np.round(positions[:, axis], 6))
        if len(coords) <= 1 or len(lines) < 2:
            factors.append(1.0)
            continue
        pitch = float(np.mean(np.diff(lines)))
        span = float(coords[-1] - coords[0])
        factors.append(max(1.0, (span / pitch + 1) / len(coords)))
    return factors[0], factors[1]
