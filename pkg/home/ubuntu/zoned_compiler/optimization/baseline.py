# -*- coding: utf-8 -*-
"""
Posicionador de base, agnóstico ao roteamento.

Percorre os itens na ordem dos índices (portas na ordem da camada, átomos por
id) e dá a cada um a opção livre de menor distância total percorrida, sem
olhar a compatibilidade dos movimentos. O reuso é aceito sempre que o átomo
está marcado e a consistência com o vizinho de sítio permite.
"""

import logging

from analysis.scheduling import Layer
from architecture.zones import Architecture
from optimization.cost import NextLayerInfo
from optimization.layer_search import GateLayerSearch, IntermediateSearch, LayerSearch
from optimization.options import PlacerParams
from optimization.placement import Placement

__version__ = "0.0.1"

logger = logging.getLogger(__name__)


def greedy_descent(search: LayerSearch):
    """Desce a árvore de busca escolhendo, em cada item, a opção de menor distância total."""
    node = search.start()
    while not search.is_goal(node):
        item = search.items[node.depth]
        best, best_distance = None, None
        for option in search.feasible_options(node, item):
            if option.reused:
                best = option
                break
            if best is None or option.travel < best_distance:
                best, best_distance = option, option.travel
        node = search.child(node, best, with_heuristic=False)
    return node


def place_baseline(
    prev: Placement,
    layer: Layer | None,
    info: NextLayerInfo,
    arch: Architecture,
    params: PlacerParams | None = None,
) -> Placement:
    """
    Colocação gulosa por distância.

    Args:
        prev (Placement): Colocação anterior.
        layer (Layer | None): Camada 2Q para uma colocação de portas; None para a intermediária.
        info (NextLayerInfo): Parceiros da próxima camada e marcas de reuso (para o custo reportado).
        arch (Architecture): Arquitetura.
        params (PlacerParams, optional): Usado apenas para o custo reportado.

    Returns:
        Placement: Colocação `gate` ou `intermediate`.
    """
    params = params or PlacerParams()
    if layer is not None:
        search = GateLayerSearch(arch, prev, layer, info, params, ordered=False)
    else:
        search = IntermediateSearch(arch, prev, info, params, ordered=False)
    return search.to_placement(greedy_descent(search))
