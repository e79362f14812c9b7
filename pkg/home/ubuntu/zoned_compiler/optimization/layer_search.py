# -*- coding: utf-8 -*-
"""
Espaço de busca da colocação de uma camada.

Um problema de busca parte da colocação anterior e decide, item a item, para
onde vão os átomos que se movem:
- Colocação de portas (`GateLayerSearch`): um item por porta cujos átomos
  precisam de um sítio. As opções são sítios livres × as duas orientações, ou,
  se os dois átomos já estão em sítios diferentes da zona de emaranhamento, um
  dos dois vai até o outro. Portas com exatamente um átomo reutilizado geram um
  movimento forçado (o parceiro vai para o slot livre) já no nó inicial.
- Colocação intermediária (`IntermediateSearch`): um item por átomo na zona de
  emaranhamento. As opções são armadilhas livres do armazenamento e, se o átomo
  está marcado para reuso, ficar onde está.

As opções de cada item são calculadas uma vez por camada, na janela em torno do
item; um nó só recalcula as armadilhas livres quando todas as opções da janela
já foram tomadas por itens anteriores. Os destinos dos movimentos são indexados
na grade das zonas de destino.

O mesmo objeto serve ao A* (`successors`), ao mergulho guloso que fornece a
primeira solução (`dive`) e ao posicionador de base (`child`).
"""

import logging
from dataclasses import dataclass, replace

import numpy as np

from architecture.zones import Architecture, ZoneKind
from optimization.astar import SearchNode
from optimization.compatibility import GroupSet, Movement, discretize
from optimization.cost import (
    REUSE,
    NextLayerInfo,
    heuristic_accelerating,
    heuristic_admissible,
    heuristic_full,
    lookahead_cost_atom,
    lookahead_cost_gate,
    mean_option_lookahead,
    scale_factors,
    total_cost,
)
from optimization.options import PlacerParams
from optimization.placement import Placement, PlacementKind
from utils.exceptions import CapacityError, ContractViolation

__version__ = "0.0.1"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Option:
    """Uma escolha para um item: movimentos (átomo, destino), custo de reuso, custo de antecipação."""

    moves: tuple = ()
    movements: tuple = ()
    reuse: float = 0.0
    lookahead: float = 0.0
    reused: frozenset = frozenset()
    excludes: frozenset = frozenset()

    @property
    def travel(self) -> float:
        """Distância total percorrida pelos átomos da opção (µm)."""
        return float(sum(m.dist for m in self.movements))


class LayerSearch:
    """Base comum às duas buscas; as subclasses definem itens, opções e dificuldade."""

    kind = PlacementKind.GATE
    target_kind = ZoneKind.ENTANGLEMENT

    def __init__(self, arch: Architecture, prev: Placement, info: NextLayerInfo, params: PlacerParams):
        self.arch = arch
        self.prev = prev
        self.info = info
        self.params = params
        self.window = params.window or arch.window
        self.items = []
        self.base_occupied = frozenset()
        self._forced = []
        self._forced_lookahead = 0.0
        self._movements = {}
        self._static = {}

    # --- Preparação ---

    def _prepare(self, items, movers, ordered: bool):
        positions = {a: self.arch.trap_position(self.prev.assignment[a]) for a in sorted(movers)}
        self.disc = discretize(positions.items())
        self.scale = scale_factors(positions.values(), self.arch, self.target_kind)

        self.items = list(items)
        self._static = {item: self.build_options(item, self.base_occupied) for item in self.items}
        if ordered:
            self.items.sort(key=lambda it: (-self._difficulty(it, self._static[it]), self._tiebreak(it)))

        n = len(self.items)
        dmin = [min((self._max_move(o) for o in self._static[it]), default=0.0) for it in self.items]
        means = [
            mean_option_lookahead([(o.reuse, o.lookahead) for o in self._static[it]], self.params.alpha)
            for it in self.items
        ]
        self._suffix_dmin = [0.0] * (n + 1)
        self._suffix_mean = [0.0] * (n + 1)
        for i in range(n - 1, -1, -1):
            self._suffix_dmin[i] = max(dmin[i], self._suffix_dmin[i + 1])
            self._suffix_mean[i] = means[i] + self._suffix_mean[i + 1]
        root = self._root()
        self._start = replace(root, h=self.heuristic(root))

    def _root(self) -> SearchNode:
        groups = GroupSet()
        for atom, target in self._forced:
            groups = groups.insert(self.movement(atom, target))
        root = SearchNode(
            moves=tuple(self._forced),
            groups=groups,
            lookahead_sum=self._forced_lookahead,
            claimed=frozenset(target for _, target in self._forced),
        )
        return replace(root, g=total_cost(root, self.params))

    # --- Interface usada pelo A* e pelo posicionador de base ---

    def start(self) -> SearchNode:
        return self._start

    def is_goal(self, node: SearchNode) -> bool:
        return node.depth == len(self.items)

    def feasible_options(self, node: SearchNode, item) -> list[Option]:
        options = [o for o in self._static[item] if self._is_feasible(node, o)]
        if options:
            return options
        # janela esgotada pelos itens anteriores: recalcula com as armadilhas já tomadas
        fresh = self.build_options(item, self.base_occupied | node.claimed)
        return [o for o in fresh if self._is_feasible(node, o)]

    def successors(self, node: SearchNode):
        item = self.items[node.depth]
        for option in self.feasible_options(node, item):
            yield self.child(node, option)

    def child(self, node: SearchNode, option: Option, with_heuristic: bool = True) -> SearchNode:
        groups = node.groups
        for m in option.movements:
            groups = groups.insert(m)
        child = SearchNode(
            parent=node,
            moves=option.moves,
            groups=groups,
            reuse_sum=node.reuse_sum + option.reuse,
            lookahead_sum=node.lookahead_sum + option.lookahead,
            depth=node.depth + 1,
            reused=node.reused | option.reused,
            claimed=node.claimed | {target for _, target in option.moves},
        )
        g = total_cost(child, self.params)
        return replace(child, g=g, h=self.heuristic(child) if with_heuristic else 0.0)

    def dive(self) -> SearchNode:
        """Solução gulosa: em cada item, o filho de menor g + h."""
        node = self.start()
        while not self.is_goal(node):
            node = min(self.successors(node), key=lambda c: c.f)
        return node

    def heuristic(self, node: SearchNode) -> float:
        remaining = len(self.items) - node.depth
        h = heuristic_admissible(node, [self._suffix_dmin[node.depth]] if remaining else [])
        h = heuristic_accelerating(h, node, remaining, self.params, self.scale)
        return heuristic_full(h, [self._suffix_mean[node.depth]])

    def movement(self, atom: int, target) -> Movement:
        key = (atom, target)
        if key not in self._movements:
            source = self.prev.assignment[atom]
            self._movements[key] = Movement(
                atom=atom,
                src_disc=self.disc[atom],
                dst=self.arch.lattice_index(target, self.target_kind),
                dist=self.arch.distance(source, target),
                source=source,
                target=target,
            )
        return self._movements[key]

    def to_placement(self, node: SearchNode) -> Placement:
        assignment = dict(self.prev.assignment)
        assignment.update(node.assignment())
        return Placement(assignment, self.kind, reused=self._result_reused(node), cost=node.g)

    # --- Auxiliares ---

    def _option(self, moves=(), **costs) -> Option:
        return Option(moves=moves, movements=tuple(self.movement(a, t) for a, t in moves), **costs)

    @staticmethod
    def _is_feasible(node: SearchNode, option: Option) -> bool:
        if option.reused and option.excludes & node.reused:
            return False
        return not any(target in node.claimed for _, target in option.moves)

    def _candidates(self, around, kind: ZoneKind, occupied) -> list:
        found = []
        for zone_index, zone in enumerate(self.arch.zones):
            if zone.kind != kind:
                continue
            try:
                traps = self.arch.candidate_traps(around, zone.id, occupied, window=self.window)
            except CapacityError:
                continue
            for t in traps:
                x, y = self.arch.site_center(t)
                found.append((round(float(np.hypot(x - around[0], y - around[1])), 6), zone_index, t.row, t.col, t))
        if not found:
            raise CapacityError(f"Não há armadilhas livres em zonas do tipo '{kind.value}'.")
        found.sort(key=lambda entry: entry[:4])
        return [entry[-1] for entry in found]

    @staticmethod
    def _max_move(option: Option) -> float:
        return max((m.dist for m in option.movements), default=0.0)

    def build_options(self, item, occupied) -> list[Option]:
        raise NotImplementedError

    def _difficulty(self, item, options) -> float:
        raise NotImplementedError

    def _tiebreak(self, item):
        return item

    def _result_reused(self, node: SearchNode) -> frozenset:
        return frozenset()


class GateLayerSearch(LayerSearch):
    kind = PlacementKind.GATE
    target_kind = ZoneKind.ENTANGLEMENT

    def __init__(self, arch, prev, layer, info, params, ordered: bool = True):
        super().__init__(arch, prev, info, params)
        self.layer = layer
        self.in_entanglement = set(prev.atoms_in(arch, ZoneKind.ENTANGLEMENT))
        operands = layer.qubits()
        stray = self.in_entanglement - operands
        if stray:
            raise ContractViolation(f"Átomos na zona de emaranhamento sem porta nesta camada: {sorted(stray)}.")
        self.base_occupied = frozenset(prev.assignment[a] for a in self.in_entanglement)

        items, movers = [], set()
        for index, gate in enumerate(layer.gates):
            a, b = gate.operands
            in_a, in_b = a in self.in_entanglement, b in self.in_entanglement
            if in_a and in_b:
                ta, tb = prev.assignment[a], prev.assignment[b]
                if ta.site == tb.site:
                    self._forced_lookahead += lookahead_cost_gate((a, b), {a: ta, b: tb}, info, arch)
                    continue
                items.append((index, a, b))
                movers.update((a, b))
            elif in_a or in_b:
                stay, move = (a, b) if in_a else (b, a)
                target = prev.assignment[stay].partner()
                if target in self.base_occupied:
                    raise ContractViolation(f"O slot vizinho do átomo reutilizado {stay} está ocupado: {target}.")
                self._forced.append((move, target))
                self._forced_lookahead += lookahead_cost_gate((a, b), {stay: prev.assignment[stay], move: target}, info, arch)
                movers.add(move)
            else:
                items.append((index, a, b))
                movers.update((a, b))
        self._prepare(items, movers, ordered)

    def build_options(self, item, occupied) -> list[Option]:
        _, a, b = item
        ta, tb = self.prev.assignment[a], self.prev.assignment[b]
        if a in self.in_entanglement and b in self.in_entanglement:
            return [
                self._gate_option(a, b, {a: tb.partner(), b: tb}, ((a, tb.partner()),)),
                self._gate_option(a, b, {a: ta, b: ta.partner()}, ((b, ta.partner()),)),
            ]
        options = []
        for site in self._candidates(self._midpoint(a, b), ZoneKind.ENTANGLEMENT, occupied):
            left, right = site, site.partner()
            for x, y in ((a, b), (b, a)):
                options.append(self._gate_option(a, b, {x: left, y: right}, ((x, left), (y, right))))
        return options

    def _gate_option(self, a, b, targets, moves) -> Option:
        return self._option(moves, lookahead=lookahead_cost_gate((a, b), targets, self.info, self.arch))

    def _midpoint(self, a, b) -> tuple[float, float]:
        pa = self.arch.trap_position(self.prev.assignment[a])
        pb = self.arch.trap_position(self.prev.assignment[b])
        return (pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2

    def _difficulty(self, item, options) -> float:
        _, a, b = item
        if a in self.in_entanglement and b in self.in_entanglement:
            return min(self._max_move(o) for o in options)
        mid = self._midpoint(a, b)
        x, y = self.arch.site_center(options[0].moves[0][1])
        return float(np.hypot(x - mid[0], y - mid[1]))

    def _tiebreak(self, item):
        return item[0]

    def _result_reused(self, node) -> frozenset:
        return frozenset(self.in_entanglement)


class IntermediateSearch(LayerSearch):
    kind = PlacementKind.INTERMEDIATE
    target_kind = ZoneKind.STORAGE

    def __init__(self, arch, prev, info, params, ordered: bool = True):
        super().__init__(arch, prev, info, params)
        atoms = prev.atoms_in(arch, ZoneKind.ENTANGLEMENT)
        self.base_occupied = frozenset(t for t in prev.assignment.values() if not arch.is_entanglement(t))
        by_trap = {t: a for a, t in prev.assignment.items()}
        self._mate = {}
        for atom in atoms:
            mate = by_trap.get(prev.assignment[atom].partner())
            if mate is not None:
                self._mate[atom] = mate
        self._prepare(atoms, atoms, ordered)

    def build_options(self, atom, occupied) -> list[Option]:
        options = []
        if atom in self.info.marked and atom in self.info.partners:
            mate = self._mate.get(atom)
            excludes = frozenset({mate}) if mate is not None and self.info.partners[atom] != mate else frozenset()
            options.append(
                Option(
                    reuse=lookahead_cost_atom(atom, REUSE, self.info, self.params.gamma, self.arch),
                    reused=frozenset({atom}),
                    excludes=excludes,
                )
            )
        around = self.arch.trap_position(self.prev.assignment[atom])
        for trap in self._candidates(around, ZoneKind.STORAGE, occupied):
            options.append(
                self._option(
                    ((atom, trap),),
                    lookahead=lookahead_cost_atom(atom, trap, self.info, self.params.gamma, self.arch),
                )
            )
        return options

    def _difficulty(self, atom, options) -> float:
        return min((self._max_move(o) for o in options if o.moves), default=0.0)

    def _result_reused(self, node) -> frozenset:
        return node.reused
