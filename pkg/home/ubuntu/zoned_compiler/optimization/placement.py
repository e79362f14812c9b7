# -*- coding: utf-8 -*-
"""
Colocações de átomos por camada.

Uma colocação é um mapa total átomo -> armadilha. Há três tipos:
- initial: todos os átomos no armazenamento, antes da primeira camada.
- gate: os dois átomos de cada porta ocupam os dois slots de um mesmo sítio
  de emaranhamento; todos os outros ficam no armazenamento.
- intermediate: após uma camada, apenas os átomos em `reused` continuam na
  zona de emaranhamento.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from architecture.zones import Architecture, Slot, TrapAddress, ZoneKind
from utils.exceptions import CapacityError, ContractViolation

__version__ = "0.0.1"

logger = logging.getLogger(__name__)


class PlacementKind(str, Enum):
    INITIAL = "initial"
    GATE = "gate"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True, eq=False)
class Placement:
    assignment: dict[int, TrapAddress]
    kind: PlacementKind
    reused: frozenset[int] = field(default_factory=frozenset)
    cost: float = 0.0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Placement):
            return NotImplemented
        return (self.assignment, self.kind, self.reused) == (other.assignment, other.kind, other.reused)

    def occupied(self) -> set[TrapAddress]:
        return set(self.assignment.values())

    def atoms_in(self, arch: Architecture, kind: ZoneKind) -> list[int]:
        return sorted(a for a, t in self.assignment.items() if arch.zone(t.zone).kind == kind)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "assignment": {str(a): t.to_dict() for a, t in sorted(self.assignment.items())},
            "reused": sorted(self.reused),
            "cost": self.cost,
        }


def place_initial(atom_count: int, arch: Architecture) -> Placement:
    """
    Colocação inicial determinística no armazenamento.

    As armadilhas são preenchidas linha a linha a partir da linha mais próxima
    (em y) do centro das zonas de emaranhamento.

    Args:
        atom_count (int): Número de átomos.
        arch (Architecture): Arquitetura alvo.

    Returns:
        Placement: Colocação do tipo `initial`.
    """
    if atom_count < 0:
        raise ContractViolation("atom_count não pode ser negativo.")
    ent_centers = [z.origin[1] + (z.rows - 1) * z.row_pitch / 2 for z in arch.entanglement_zones]
    center_y = float(np.mean(ent_centers))

    traps = []
    for zone_index, zone in enumerate(arch.zones):
        if zone.kind != ZoneKind.STORAGE:
            continue
        for addr in arch.traps(zone.id):
            y = arch.trap_position(addr)[1]
            traps.append((abs(y - center_y), zone_index, addr.row, addr.col, addr))
    if atom_count > len(traps):
        raise CapacityError(f"Armazenamento com {len(traps)} armadilhas não comporta {atom_count} átomos.")
    traps.sort(key=lambda t: t[:4])
    return Placement({atom: traps[atom][-1] for atom in range(atom_count)}, PlacementKind.INITIAL)


def check_placement(placement: Placement, arch: Architecture, gates=()) -> None:
    """
    Verifica os invariantes estruturais de uma colocação (injetividade, pareamento, confinamento).

    Args:
        placement (Placement): Colocação a verificar.
        arch (Architecture): Arquitetura alvo.
        gates: Portas da camada (para colocações `gate`), como pares de átomos.
    """
    traps = list(placement.assignment.values())
    if len(set(traps)) != len(traps):
        raise ContractViolation("Colocação não injetiva: duas armadilhas iguais.")
    for addr in traps:
        arch.validate_address(addr)
    in_entanglement = set(placement.atoms_in(arch, ZoneKind.ENTANGLEMENT))

    if placement.kind == PlacementKind.GATE:
        operands = set()
        for a, b in gates:
            ta, tb = placement.assignment[a], placement.assignment[b]
            if not arch.is_entanglement(ta) or ta.site != tb.site or ta.slot == tb.slot:
                raise ContractViolation(f"Porta ({a}, {b}) não ocupa um par de emaranhamento: {ta}, {tb}.")
            operands.update((a, b))
        if in_entanglement - operands:
            raise ContractViolation(f"Átomos fora das portas na zona de emaranhamento: {sorted(in_entanglement - operands)}.")
    elif placement.kind == PlacementKind.INTERMEDIATE:
        if in_entanglement - placement.reused:
            raise ContractViolation(f"Átomos não reutilizados na zona de emaranhamento: {sorted(in_entanglement - placement.reused)}.")
    elif in_entanglement:
        raise ContractViolation("A colocação inicial deve ficar toda no armazenamento.")


def load_placement(text: str, arch: Architecture) -> Placement:
    """
    Lê uma colocação no formato de `Placement.to_json` e verifica seus invariantes.

    Serve como ponto de partida alternativo do pipeline (por exemplo, átomos já
    reutilizados na zona de emaranhamento). Colocações `gate` não são aceitas.

    Args:
        text (str): Documento JSON.
        arch (Architecture): Arquitetura alvo.

    Returns:
        Placement: Colocação `initial` ou `intermediate`.
    """
    try:
        doc = json.loads(text)
        kind = PlacementKind(doc["kind"])
        assignment = {
            int(atom): TrapAddress(t["zone"], int(t["row"]), int(t["col"]), Slot(t.get("slot", Slot.SINGLE.value)))
            for atom, t in doc["assignment"].items()
        }
        reused = frozenset(int(a) for a in doc.get("reused", []))
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise ContractViolation(f"Documento de colocação inválido: {e}") from None
    if kind == PlacementKind.GATE:
        raise ContractViolation("A colocação de partida não pode ser do tipo 'gate'.")
    placement = Placement(assignment, kind, reused)
    check_placement(placement, arch)
    logger.info(f"Colocação '{kind.value}' lida: {len(assignment)} átomos, {len(reused)} reutilizados.")
    return placement
