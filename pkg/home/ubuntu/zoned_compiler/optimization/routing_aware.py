# -*- coding: utf-8 -*-
"""
Posicionador ciente de roteamento.

Para cada camada, uma busca A* escolhe as armadilhas dos átomos que se movem
minimizando o custo dos grupos de movimentos compatíveis (e, portanto, o número
e a duração dos passos de rearranjo), mais os termos de reuso e de antecipação.
Antes do A*, um mergulho guloso (o filho de menor g + h em cada item) fornece
uma primeira solução, que limita a busca. Se o limite de nós se esgota, usa o
melhor objetivo encontrado; sem nenhum objetivo, recorre ao posicionador de
base naquela camada.
"""

import logging

from analysis.scheduling import Layer
from architecture.zones import Architecture
from optimization.astar import astar
from optimization.baseline import place_baseline
from optimization.cost import NextLayerInfo
from optimization.layer_search import GateLayerSearch, IntermediateSearch, LayerSearch
from optimization.options import PlacerParams
from optimization.placement import Placement
from utils.exceptions import SearchBudgetExceeded

__version__ = "0.0.1"

logger = logging.getLogger(__name__)


class RoutingAwarePlacer:
    """Posicionador A* por camada, com os parâmetros α, β, γ, δ, janela e limite de nós."""

    def __init__(self, arch: Architecture, params: PlacerParams | None = None):
        self.arch = arch
        self.params = params or PlacerParams()

    def place_gate_layer(self, prev: Placement, layer: Layer, info: NextLayerInfo) -> Placement:
        """
        Colocação de portas de uma camada 2Q.

        Args:
            prev (Placement): Colocação anterior (inicial ou intermediária); seus átomos na zona
                              de emaranhamento são os reutilizados.
            layer (Layer): Camada de 2 qubits.
            info (NextLayerInfo): Parceiros da camada seguinte, marcas de reuso da fronteira
                                  seguinte e as armadilhas atuais (`prev`).

        Returns:
            Placement: Colocação do tipo `gate`.
        """
        search = GateLayerSearch(self.arch, prev, layer, info, self.params)
        return self._solve(search, lambda: place_baseline(prev, layer, info, self.arch, self.params))

    def place_intermediate(self, prev: Placement, info: NextLayerInfo) -> Placement:
        """
        Colocação intermediária após uma camada 2Q.

        Args:
            prev (Placement): Colocação de portas da camada que terminou.
            info (NextLayerInfo): Parceiros da próxima camada, marcas de reuso e as armadilhas
                                  atuais (`prev`). Vazio depois da última camada.

        Returns:
            Placement: Colocação do tipo `intermediate`.
        """
        search = IntermediateSearch(self.arch, prev, info, self.params)
        return self._solve(search, lambda: place_baseline(prev, None, info, self.arch, self.params))

    def _solve(self, search: LayerSearch, fallback) -> Placement:
        try:
            node = astar(search, self.params.max_nodes, incumbent=search.dive())
        except SearchBudgetExceeded as e:
            if e.best_goal is None:
                logger.warning(f"{e} Nenhum objetivo encontrado; usando o posicionador de base nesta camada.")
                return fallback()
            logger.warning(f"{e} Usando o melhor objetivo encontrado (g={e.best_goal.g:.3f}).")
            node = e.best_goal
        return search.to_placement(node)


def place_gate_layer(prev: Placement, layer: Layer, info: NextLayerInfo, arch: Architecture, params: PlacerParams) -> Placement:
    return RoutingAwarePlacer(arch, params).place_gate_layer(prev, layer, info)


def place_intermediate(prev: Placement, info: NextLayerInfo, arch: Architecture, params: PlacerParams) -> Placement:
    return RoutingAwarePlacer(arch, params).place_intermediate(prev, info)
