# -*- coding: utf-8 -*-
"""
Roteador: transforma duas colocações consecutivas em passos de rearranjo.

Os átomos que mudam de armadilha são agrupados com a mesma estrutura de
compatibilidade do posicionador (primeiro grupo compatível, átomos em ordem
decrescente de distância); cada grupo vira um passo. Os passos são ordenados por
distância máxima decrescente e depois reordenados para que nenhum átomo seja
solto numa armadilha ainda ocupada. Ciclos de dependência são quebrados levando
um átomo para uma armadilha auxiliar livre. Em cada passo, as transferências
(captura e soltura) são divididas em lotes que respeitam a restrição de
"ghost spots": toda interseção ocupada das linhas e colunas ativas pertence ao lote.
"""

import itertools
import logging
from dataclasses import dataclass, field

import networkx as nx

from architecture.zones import Architecture, TrapAddress
from optimization.compatibility import GroupSet, Movement, discretize
from optimization.placement import Placement
from utils.exceptions import CapacityError, ContractViolation, RoutingError

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

SOURCE = "source"
TARGET = "target"


@dataclass(frozen=True)
class Move:
    atom: int
    source: TrapAddress
    target: TrapAddress
    src: tuple[float, float]
    dst: tuple[float, float]
    dist: float

    def to_json(self) -> dict:
        """Forma JSON do movimento: endereços, coordenadas (µm) e distância."""
        return {
            "atom": self.atom,
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "from": list(self.src),
            "to": list(self.dst),
            "dist": self.dist,
        }


@dataclass(frozen=True)
class RearrangementStep:
    movements: tuple[Move, ...]
    pickup_batches: tuple[frozenset, ...]
    drop_batches: tuple[frozenset, ...]
    max_dist: float

    @property
    def transfers(self) -> int:
        return len(self.pickup_batches) + len(self.drop_batches)

    def to_json(self) -> dict:
        return {
            "movements": [m.to_json() for m in self.movements],
            "pickup_batches": [sorted(b) for b in self.pickup_batches],
            "drop_batches": [sorted(b) for b in self.drop_batches],
            "max_dist": self.max_dist,
        }


@dataclass(frozen=True)
class Route:
    steps: tuple[RearrangementStep, ...] = ()
    groups: GroupSet = field(default_factory=GroupSet)
    buffered: tuple[int, ...] = ()

    @property
    def trap_transfers(self) -> int:
        return sum(step.transfers for step in self.steps)

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "buffered": list(self.buffered)}


def make_move(arch: Architecture, atom: int, source: TrapAddress, target: TrapAddress) -> Move:
    return Move(atom, source, target, arch.trap_position(source), arch.trap_position(target), arch.distance(source, target))


def group_moves(moves, arch: Architecture) -> tuple[GroupSet, list[list[Move]]]:
    """Agrupa movimentos por primeiro encaixe compatível, em ordem decrescente de distância."""
    moves = sorted(moves, key=lambda m: (-m.dist, m.atom))
    disc = discretize((m.atom, m.src) for m in moves)
    groups = GroupSet()
    buckets: list[list[Move]] = []
    for m in moves:
        movement = Movement(m.atom, disc[m.atom], arch.lattice_index(m.target), m.dist, m.source, m.target)
        groups, index = groups.place(movement)
        if index == len(buckets):
            buckets.append([])
        buckets[index].append(m)
    return groups, buckets


def split_ghost_batches(movements, occupancy, endpoint: str = SOURCE) -> list[frozenset]:
    """
    Divide as transferências de um passo em lotes livres de "ghost spots".

    Varre os átomos em ordem de linha (y, x) do ponto de transferência e coloca cada um
    no primeiro lote em que, somado, toda interseção ocupada das linhas × colunas ativas
    pertence ao próprio lote. No fim, lotes cuja união continua limpa são fundidos.

    Args:
        movements: Movimentos do passo.
        occupancy: Conjunto de posições (x, y) ocupadas nas armadilhas fixas.
        endpoint (str): "source" para captura ou "target" para soltura.

    Returns:
        list[frozenset]: Lotes de ids de átomos.
    """
    points = {m.atom: (m.src if endpoint == SOURCE else m.dst) for m in movements}
    order = sorted(points, key=lambda a: (points[a][1], points[a][0], a))
    batches: list[list[int]] = []
    for atom in order:
        for batch in batches:
            if _batch_is_clean([points[a] for a in batch] + [points[atom]], occupancy):
                batch.append(atom)
                break
        else:
            batches.append([atom])

    merged = True
    while merged:
        merged = False
        for i, j in itertools.combinations(range(len(batches)), 2):
            if _batch_is_clean([points[a] for a in batches[i] + batches[j]], occupancy):
                batches[i] += batches.pop(j)
                merged = True
                break
    return [frozenset(b) for b in batches]


def _batch_is_clean(points, occupancy) -> bool:
    own = set(points)
    xs = {p[0] for p in points}
    ys = {p[1] for p in points}
    return all((x, y) not in occupancy or (x, y) in own for x in xs for y in ys)


def verify_step(step: RearrangementStep, occupancy) -> bool:
    """
    Verificação independente de um passo.

    (a) Não cruzamento e preservação em cada eixo, par a par, nas coordenadas físicas.
    (b) Cada lote de captura (soltura) só tem interseções ocupadas que pertencem ao lote,
        com a ocupação antes do passo (depois de retirar as origens e somar os destinos).
    """
    moves = list(step.movements)
    for i, first in enumerate(moves):
        for second in moves[i + 1:]:
            for axis in (0, 1):
                s1, s2 = first.src[axis], second.src[axis]
                d1, d2 = first.dst[axis], second.dst[axis]
                if (s1 == s2) != (d1 == d2):
                    return False
                if s1 != s2 and (s1 < s2) != (d1 < d2):
                    return False

    atoms = {m.atom for m in moves}
    by_atom = {m.atom: m for m in moves}
    for batches in (step.pickup_batches, step.drop_batches):
        covered = [a for b in batches for a in b]
        if sorted(covered) != sorted(atoms) or any(not b for b in batches):
            return False

    occupancy = set(occupancy)
    pickup_occupancy = occupancy | {m.src for m in moves}
    drop_occupancy = (occupancy - {m.src for m in moves}) | {m.dst for m in moves}
    for batch in step.pickup_batches:
        if not _batch_is_clean([by_atom[a].src for a in batch], pickup_occupancy):
            return False
    for batch in step.drop_batches:
        if not _batch_is_clean([by_atom[a].dst for a in batch], drop_occupancy):
            return False
    return True


def route_transition(src: Placement, dst: Placement, arch: Architecture) -> Route:
    """
    Calcula os passos de rearranjo que levam `src` a `dst`.

    Args:
        src (Placement): Colocação de origem.
        dst (Placement): Colocação de destino (mesmos átomos).
        arch (Architecture): Arquitetura.

    Returns:
        Route: Passos em ordem de execução.
    """
    if set(src.assignment) != set(dst.assignment):
        raise ContractViolation("As colocações de origem e destino têm conjuntos de átomos diferentes.")

    movers = sorted(a for a in src.assignment if src.assignment[a] != dst.assignment[a])
    if not movers:
        return Route()

    holder = {t: a for a, t in src.assignment.items()}
    moving = set(movers)
    for atom in movers:
        target = dst.assignment[atom]
        blocker = holder.get(target)
        if blocker is not None and blocker not in moving:
            raise RoutingError(f"Destino {target} do átomo {atom} está ocupado pelo átomo parado {blocker}.", trap=target)

    moves = [make_move(arch, a, src.assignment[a], dst.assignment[a]) for a in movers]
    groups, buckets = group_moves(moves, arch)
    steps = sorted(buckets, key=lambda b: -max(m.dist for m in b))

    pre, post = [], []
    reserved = set(src.assignment.values()) | set(dst.assignment.values())
    while True:
        graph = _dependency_graph(steps)
        if nx.is_directed_acyclic_graph(graph):
            break
        u, v = nx.find_cycle(graph)[0][:2]
        v_targets = {m.target for m in steps[v]}
        blocked = next(m for m in steps[u] if m.source in v_targets)
        aux = _auxiliary_trap(arch, blocked, reserved)
        reserved.add(aux)
        pre.append(make_move(arch, blocked.atom, blocked.source, aux))
        post.append(make_move(arch, blocked.atom, aux, blocked.target))
        steps[u] = [m for m in steps[u] if m is not blocked]
        steps = [s for s in steps if s]
        logger.warning(f"Ciclo de dependência entre passos: átomo {blocked.atom} passa pela armadilha auxiliar {aux}.")

    graph = _dependency_graph(steps)
    ordered = [steps[i] for i in nx.lexicographical_topological_sort(graph, key=lambda i: i)]
    if pre:
        ordered = group_moves(pre, arch)[1] + ordered + group_moves(post, arch)[1]

    occupancy = {arch.trap_position(t) for t in src.assignment.values()}
    emitted = []
    for bucket in ordered:
        pickups = split_ghost_batches(bucket, occupancy, SOURCE)
        drop_occupancy = (occupancy - {m.src for m in bucket}) | {m.dst for m in bucket}
        drops = split_ghost_batches(bucket, drop_occupancy, TARGET)
        emitted.append(RearrangementStep(tuple(bucket), tuple(pickups), tuple(drops), max(m.dist for m in bucket)))
        occupancy = drop_occupancy

    logger.debug(f"Transição roteada: {len(movers)} átomos, {len(emitted)} passos.")
    return Route(tuple(emitted), groups, tuple(sorted(m.atom for m in pre)))


def _dependency_graph(steps) -> nx.DiGraph:
    """Aresta i -> j quando o passo j solta um átomo numa armadilha que o passo i esvazia."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(steps)))
    sources = [{m.source for m in step} for step in steps]
    for j, step in enumerate(steps):
        targets = {m.target for m in step}
        for i in range(len(steps)):
            if i != j and targets & sources[i]:
                graph.add_edge(i, j)
    return graph


def _auxiliary_trap(arch: Architecture, move: Move, reserved) -> TrapAddress:
    """Armadilha livre mais próxima da origem, preferindo a zona de destino e depois a de origem."""
    zones = [move.target.zone, move.source.zone] + [z.id for z in arch.zones]
    for zone in dict.fromkeys(zones):
        try:
            return arch.candidate_traps(move.src, zone, reserved, minimum=1)[0]
        except CapacityError:
            continue
    raise RoutingError(f"Sem armadilha auxiliar livre para o átomo {move.atom}.", trap=move.source)
