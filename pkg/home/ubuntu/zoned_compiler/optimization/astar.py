# -*- coding: utf-8 -*-
"""
Busca A* sobre colocações parciais.

Cada nó acrescenta exatamente uma porta (colocação de portas) ou um átomo
(colocação intermediária) ao seu pai. A fronteira é ordenada por g + h; empates
favorecem o nó mais profundo e depois a ordem de inserção. O objetivo é testado
quando o nó sai da fronteira, e a busca devolve o objetivo de menor g gerado até
ali. Uma solução inicial (`incumbent`) pode entrar na fronteira desde o início:
assim que nenhum nó aberto tem estimativa menor que o custo dela, a busca para.
Ao atingir o limite de expansões, lança SearchBudgetExceeded carregando o
melhor objetivo conhecido.
"""

import heapq
import itertools
import logging
from dataclasses import dataclass, field

from optimization.compatibility import GroupSet
from utils.exceptions import SearchBudgetExceeded

__version__ = "0.0.1"

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SearchNode:
    parent: "SearchNode | None" = None
    moves: tuple = ()
    groups: GroupSet = field(default_factory=GroupSet)
    reuse_sum: float = 0.0
    lookahead_sum: float = 0.0
    g: float = 0.0
    h: float = 0.0
    depth: int = 0
    reused: frozenset = frozenset()
    claimed: frozenset = frozenset()

    @property
    def f(self) -> float:
        return self.g + self.h

    def assignment(self) -> dict:
        """Destinos (átomo -> armadilha) acumulados do nó inicial até este."""
        chain, node = [], self
        while node is not None:
            chain.append(node.moves)
            node = node.parent
        return {atom: target for moves in reversed(chain) for atom, target in moves}


def astar(problem, max_nodes: int, incumbent: SearchNode | None = None) -> SearchNode:
    """
    Executa A* até tirar um nó objetivo da fronteira.

    Args:
        problem: Objeto com `start()`, `is_goal(node)` e `successors(node)`.
        max_nodes (int): Limite de nós expandidos.
        incumbent (SearchNode, optional): Objetivo já conhecido (por exemplo, de um mergulho guloso).

    Returns:
        SearchNode: O objetivo de menor g gerado até o primeiro objetivo sair da fronteira.
    """
    start = problem.start()
    counter = itertools.count()
    frontier = [(start.f, -start.depth, next(counter), start)]
    best_goal = start if problem.is_goal(start) else None
    if incumbent is not None:
        heapq.heappush(frontier, (incumbent.g, -incumbent.depth, next(counter), incumbent))
        if best_goal is None or incumbent.g < best_goal.g:
            best_goal = incumbent
    expanded = 0

    while frontier:
        _, _, _, node = heapq.heappop(frontier)
        if problem.is_goal(node):
            logger.debug(f"A*: objetivo com g={best_goal.g:.3f} após {expanded} expansões (fronteira {len(frontier)}).")
            return best_goal
        if expanded >= max_nodes:
            raise SearchBudgetExceeded(f"Limite de {max_nodes} nós expandidos atingido.", best_goal=best_goal)
        expanded += 1
        for child in problem.successors(node):
            if problem.is_goal(child) and (best_goal is None or child.g < best_goal.g):
                best_goal = child
            heapq.heappush(frontier, (child.f, -child.depth, next(counter), child))

    raise SearchBudgetExceeded("Fronteira esgotada sem alcançar um objetivo.", best_goal=best_goal)
