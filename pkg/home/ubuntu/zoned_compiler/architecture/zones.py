# -*- coding: utf-8 -*-
"""
Módulo de geometria da arquitetura zonada de átomos neutros.

Modela as zonas (armazenamento e emaranhamento) como grades alinhadas aos eixos
em um plano contínuo em µm, guarda as constantes físicas usadas no modelo de
tempo e responde às consultas espaciais do compilador:
- `load_architecture(spec_text)`: lê e valida o documento JSON da arquitetura.
- `trap_position(arch, addr)`: coordenadas (x, y) de uma armadilha.
- `distance(arch, a, b)`: distância euclidiana entre duas armadilhas.
- `candidate_traps(...)`: armadilhas livres numa janela centrada (poda da busca).
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from utils.exceptions import (
    AddressError,
    ArchitectureParseError,
    ArchitectureValidationError,
    CapacityError,
    ContractViolation,
)

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

# Constantes
DEFAULT_ACCELERATION = 2750.0  # m/s²
DEFAULT_TRAP_TRANSFER_TIME_US = 15.0
DEFAULT_WINDOW = (6, 6)  # 36 armadilhas mais próximas
POSITION_DECIMALS = 6


class ZoneKind(str, Enum):
    STORAGE = "storage"
    ENTANGLEMENT = "entanglement"


class Slot(str, Enum):
    SINGLE = "single"
    PAIR_LEFT = "pair_left"
    PAIR_RIGHT = "pair_right"


@dataclass(frozen=True)
class Zone:
    """Zona retangular de armadilhas. Zonas de emaranhamento têm dois slots por sítio."""

    id: str
    kind: ZoneKind
    origin: tuple[float, float]
    rows: int
    cols: int
    row_pitch: float
    col_pitch: float
    pair_offset: float | None = None

    @property
    def is_entanglement(self) -> bool:
        return self.kind == ZoneKind.ENTANGLEMENT

    @property
    def slots(self) -> tuple[Slot, ...]:
        if self.is_entanglement:
            return (Slot.PAIR_LEFT, Slot.PAIR_RIGHT)
        return (Slot.SINGLE,)

    @property
    def capacity(self) -> int:
        """Número de armadilhas da zona (dois slots por sítio no emaranhamento)."""
        return self.rows * self.cols * len(self.slots)

    def site_position(self, row: int, col: int) -> tuple[float, float]:
        """Centro do sítio (row, col), sem o deslocamento do par."""
        x = self.origin[0] + col * self.col_pitch
        y = self.origin[1] + row * self.row_pitch
        return round(x, POSITION_DECIMALS), round(y, POSITION_DECIMALS)

    def slot_offset(self, slot: Slot) -> float:
        if slot == Slot.PAIR_LEFT:
            return -self.pair_offset / 2
        if slot == Slot.PAIR_RIGHT:
            return self.pair_offset / 2
        return 0.0

    def bounds(self) -> tuple[float, float, float, float]:
        """Caixa envolvente fechada (xmin, ymin, xmax, ymax) de todas as armadilhas."""
        half = (self.pair_offset or 0.0) / 2
        x0, y0 = self.origin
        return (
            x0 - half,
            y0,
            x0 + (self.cols - 1) * self.col_pitch + half,
            y0 + (self.rows - 1) * self.row_pitch,
        )

    def nearest_site(self, around: tuple[float, float]) -> tuple[int, int]:
        """Sítio (linha, coluna) mais próximo de um ponto, limitado às bordas da zona."""
        row = int(np.clip(np.rint((around[1] - self.origin[1]) / self.row_pitch), 0, self.rows - 1))
        col = int(np.clip(np.rint((around[0] - self.origin[0]) / self.col_pitch), 0, self.cols - 1))
        return row, col


@dataclass(frozen=True, order=True)
class TrapAddress:
    """Endereço de uma armadilha: zona, linha, coluna e slot do par."""

    zone: str
    row: int
    col: int
    slot: Slot = Slot.SINGLE

    def partner(self) -> "TrapAddress":
        """A outra armadilha do mesmo par (apenas em zonas de emaranhamento)."""
        if self.slot == Slot.SINGLE:
            raise AddressError(f"Armadilha {self} não pertence a um par.")
        other = Slot.PAIR_RIGHT if self.slot == Slot.PAIR_LEFT else Slot.PAIR_LEFT
        return TrapAddress(self.zone, self.row, self.col, other)

    @property
    def site(self) -> tuple[str, int, int]:
        return self.zone, self.row, self.col

    def to_dict(self) -> dict:
        return {"zone": self.zone, "row": self.row, "col": self.col, "slot": self.slot.value}


@dataclass(frozen=True)
class Architecture:
    """Arquitetura zonada imutável; segura para leitura concorrente."""

    zones: tuple[Zone, ...]
    acceleration: float = DEFAULT_ACCELERATION
    trap_transfer_time: float = DEFAULT_TRAP_TRANSFER_TIME_US
    interaction_radius: float | None = None
    window_rows: int = DEFAULT_WINDOW[0]
    window_cols: int = DEFAULT_WINDOW[1]
    rydberg_time_us: float = 0.0
    one_qubit_gate_time_us: float = 0.0
    include_gate_times: bool = False
    _zone_index: dict = field(init=False, repr=False, compare=False)
    _lattice: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "zones", tuple(self.zones))
        self._validate()
        object.__setattr__(self, "_zone_index", {zone.id: zone for zone in self.zones})
        # chave None: grade global; chaves ZoneKind: grade só das zonas daquele tipo
        lines = {key: (set(), set()) for key in (None, *ZoneKind)}
        for zone in self.zones:
            ys = {round(zone.origin[1] + r * zone.row_pitch, POSITION_DECIMALS) for r in range(zone.rows)}
            xs = {
                round(zone.origin[0] + c * zone.col_pitch + zone.slot_offset(slot), POSITION_DECIMALS)
                for slot in zone.slots
                for c in range(zone.cols)
            }
            for key in (None, zone.kind):
                lines[key][0].update(ys)
                lines[key][1].update(xs)
        lattice = {
            key: ({y: i for i, y in enumerate(sorted(ys))}, {x: i for i, x in enumerate(sorted(xs))})
            for key, (ys, xs) in lines.items()
        }
        object.__setattr__(self, "_lattice", lattice)

    # --- Validação ---

    def _validate(self):
        if not self.zones:
            raise ArchitectureValidationError("A arquitetura precisa de zonas.", field="zones")
        seen = set()
        for zone in self.zones:
            if zone.id in seen:
                raise ArchitectureValidationError(f"Id de zona duplicado: '{zone.id}'.", field="zones.id", zones=(zone.id,))
            seen.add(zone.id)
            _validate_zone(zone, self.interaction_radius)
        kinds = {zone.kind for zone in self.zones}
        for kind in ZoneKind:
            if kind not in kinds:
                raise ArchitectureValidationError(f"É necessária ao menos uma zona do tipo '{kind.value}'.", field="zones.kind")
        for i, first in enumerate(self.zones):
            for second in self.zones[i + 1:]:
                if _boxes_overlap(first.bounds(), second.bounds()):
                    raise ArchitectureValidationError(
                        f"As zonas '{first.id}' e '{second.id}' se sobrepõem.",
                        field="zones",
                        zones=(first.id, second.id),
                    )
        if self.acceleration <= 0:
            raise ArchitectureValidationError("acceleration deve ser positiva.", field="acceleration")
        if self.trap_transfer_time < 0:
            raise ArchitectureValidationError("trap_transfer_time_us não pode ser negativo.", field="trap_transfer_time_us")
        if self.window_rows < 1 or self.window_cols < 1:
            raise ArchitectureValidationError("A janela de poda precisa de extensões >= 1.", field="window")

    # --- Consultas ---

    def zone(self, zone_id: str) -> Zone:
        try:
            return self._zone_index[zone_id]
        except KeyError:
            raise AddressError(f"Zona desconhecida: '{zone_id}'.") from None

    @property
    def entanglement_zones(self) -> tuple[Zone, ...]:
        return tuple(z for z in self.zones if z.kind == ZoneKind.ENTANGLEMENT)

    @property
    def window(self) -> tuple[int, int]:
        return self.window_rows, self.window_cols

    def is_entanglement(self, addr: TrapAddress) -> bool:
        return self.zone(addr.zone).is_entanglement

    def validate_address(self, addr: TrapAddress) -> Zone:
        zone = self.zone(addr.zone)
        if not (0 <= addr.row < zone.rows and 0 <= addr.col < zone.cols):
            raise AddressError(f"Endereço fora da zona '{zone.id}' ({zone.rows}x{zone.cols}): {addr}.")
        if addr.slot not in zone.slots:
            raise AddressError(f"Slot '{addr.slot.value}' inválido para a zona '{zone.id}' ({zone.kind.value}).")
        return zone

    def trap_position(self, addr: TrapAddress) -> tuple[float, float]:
        zone = self.validate_address(addr)
        x = zone.origin[0] + addr.col * zone.col_pitch + zone.slot_offset(addr.slot)
        y = zone.origin[1] + addr.row * zone.row_pitch
        return round(x, POSITION_DECIMALS), round(y, POSITION_DECIMALS)

    def site_center(self, addr: TrapAddress) -> tuple[float, float]:
        zone = self.validate_address(addr)
        return zone.site_position(addr.row, addr.col)

    def distance(self, a: TrapAddress, b: TrapAddress) -> float:
        (xa, ya), (xb, yb) = self.trap_position(a), self.trap_position(b)
        return float(np.hypot(xa - xb, ya - yb))

    def traps(self, zone_id: str) -> list[TrapAddress]:
        zone = self.zone(zone_id)
        return [TrapAddress(zone.id, r, c, s) for r in range(zone.rows) for c in range(zone.cols) for s in zone.slots]

    def lattice_index(self, addr: TrapAddress, kind: ZoneKind | None = None) -> tuple[int, int]:
        """
        Índices (linha, coluna) da armadilha numa grade de coordenadas distintas.

        Sem `kind`, a grade reúne todas as zonas. Com `kind`, só as linhas e colunas das
        zonas daquele tipo contam, de modo que destinos vizinhos numa zona têm índices
        consecutivos mesmo quando outras zonas intercalam coordenadas.
        """
        rows, cols = self._lattice[kind]
        x, y = self.trap_position(addr)
        try:
            return rows[y], cols[x]
        except KeyError:
            raise AddressError(f"Armadilha {addr} fora da grade de destino pedida.") from None

    def lattice_lines(self, kind: ZoneKind) -> tuple[np.ndarray, np.ndarray]:
        """Coordenadas y e x distintas (ordenadas) das armadilhas das zonas de um tipo."""
        rows, cols = self._lattice[kind]
        return np.array(sorted(rows)), np.array(sorted(cols))

    def candidate_traps(
        self,
        around: tuple[float, float],
        zone_id: str,
        occupied,
        window: tuple[int, int] | None = None,
        minimum: int = 1,
    ) -> list[TrapAddress]:
        """
        Armadilhas livres da zona dentro de uma janela centrada na armadilha mais próxima de `around`.

        Se a janela tiver menos armadilhas livres que `minimum`, ela cresce (+1 em cada
        extensão) até atingir o mínimo ou cobrir a zona inteira. Numa zona de emaranhamento
        o resultado são sítios livres (os dois slots vazios), reportados com `pair_left`.

        Args:
            around (tuple[float, float]): Ponto de referência (µm).
            zone_id (str): Zona consultada.
            occupied: Conjunto de TrapAddress ocupados.
            window (tuple[int, int], optional): Extensões (linhas, colunas) da janela.
                                                Usa a janela da arquitetura se None.
            minimum (int): Quantidade mínima de armadilhas livres desejada.

        Returns:
            list[TrapAddress]: Ordenadas por distância a `around`, empates por (linha, coluna).
        """
        zone = self.zone(zone_id)
        rows_w, cols_w = window or self.window
        if rows_w < 1 or cols_w < 1:
            raise ContractViolation(f"Janela inválida: {rows_w}x{cols_w}.")

        free = np.ones((zone.rows, zone.cols), dtype=bool)
        for addr in occupied:
            if addr.zone == zone.id and 0 <= addr.row < zone.rows and 0 <= addr.col < zone.cols:
                free[addr.row, addr.col] = False
        total_free = int(free.sum())
        if total_free == 0:
            raise CapacityError(f"A zona '{zone.id}' está completamente ocupada.")

        needed = min(max(minimum, 1), total_free)
        center_row, center_col = zone.nearest_site(around)
        while True:
            r_lo, r_hi = _window_span(center_row, rows_w, zone.rows)
            c_lo, c_hi = _window_span(center_col, cols_w, zone.cols)
            if int(free[r_lo:r_hi, c_lo:c_hi].sum()) >= needed:
                break
            rows_w += 1
            cols_w += 1

        rows, cols = np.nonzero(free[r_lo:r_hi, c_lo:c_hi])
        rows, cols = rows + r_lo, cols + c_lo
        xs = zone.origin[0] + cols * zone.col_pitch
        ys = zone.origin[1] + rows * zone.row_pitch
        dist = np.round(np.hypot(xs - around[0], ys - around[1]), POSITION_DECIMALS)
        order = np.lexsort((cols, rows, dist))
        slot = zone.slots[0]
        return [TrapAddress(zone.id, int(rows[i]), int(cols[i]), slot) for i in order]


# --- Funções de módulo (interface das operações) ---

def load_architecture(spec_text: str) -> Architecture:
    """
    Lê o documento JSON da arquitetura e devolve uma Architecture validada.

    Args:
        spec_text (str): Conteúdo JSON com `zones`, `acceleration`, `trap_transfer_time_us`,
                         `interaction_radius`, `window` e os tempos opcionais das portas.

    Returns:
        Architecture: Arquitetura validada.
    """
    try:
        doc = json.loads(spec_text)
    except json.JSONDecodeError as e:
        raise ArchitectureParseError(f"JSON da arquitetura malformado: {e}") from e
    if not isinstance(doc, dict):
        raise ArchitectureParseError("O documento da arquitetura deve ser um objeto JSON.")

    raw_zones = doc.get("zones")
    if not isinstance(raw_zones, list):
        raise ArchitectureParseError("Campo 'zones' ausente ou não é uma lista.", field="zones")
    zones = tuple(_parse_zone(raw, i) for i, raw in enumerate(raw_zones))

    window = doc.get("window", {"rows": DEFAULT_WINDOW[0], "cols": DEFAULT_WINDOW[1]})
    if not isinstance(window, dict):
        raise ArchitectureParseError("Campo 'window' deve ser um objeto {rows, cols}.", field="window")

    arch = Architecture(
        zones=zones,
        acceleration=_number(doc, "acceleration", DEFAULT_ACCELERATION),
        trap_transfer_time=_number(doc, "trap_transfer_time_us", DEFAULT_TRAP_TRANSFER_TIME_US),
        interaction_radius=_number(doc, "interaction_radius", None),
        window_rows=_integer(window, "rows", DEFAULT_WINDOW[0], prefix="window."),
        window_cols=_integer(window, "cols", DEFAULT_WINDOW[1], prefix="window."),
        rydberg_time_us=_number(doc, "rydberg_time_us", 0.0),
        one_qubit_gate_time_us=_number(doc, "one_qubit_gate_time_us", 0.0),
        include_gate_times=bool(doc.get("include_gate_times", False)),
    )
    logger.info(f"Arquitetura carregada: {len(arch.zones)} zonas, janela {arch.window_rows}x{arch.window_cols}.")
    return arch


def trap_position(arch: Architecture, addr: TrapAddress) -> tuple[float, float]:
    return arch.trap_position(addr)


def distance(arch: Architecture, a: TrapAddress, b: TrapAddress) -> float:
    return arch.distance(a, b)


def candidate_traps(arch: Architecture, around, zone: str, occupied, window=None, minimum: int = 1) -> list[TrapAddress]:
    return arch.candidate_traps(around, zone, occupied, window=window, minimum=minimum)


def architecture_to_dict(arch: Architecture) -> dict:
    """Serializa a arquitetura no mesmo esquema aceito por `load_architecture`."""
    zones = []
    for zone in arch.zones:
        entry = {
            "id": zone.id,
            "kind": zone.kind.value,
            "origin": list(zone.origin),
            "rows": zone.rows,
            "cols": zone.cols,
            "row_pitch": zone.row_pitch,
            "col_pitch": zone.col_pitch,
        }
        if zone.pair_offset is not None:
            entry["pair_offset"] = zone.pair_offset
        zones.append(entry)
    doc = {
        "zones": zones,
        "acceleration": arch.acceleration,
        "trap_transfer_time_us": arch.trap_transfer_time,
        "window": {"rows": arch.window_rows, "cols": arch.window_cols},
        "rydberg_time_us": arch.rydberg_time_us,
        "one_qubit_gate_time_us": arch.one_qubit_gate_time_us,
        "include_gate_times": arch.include_gate_times,
    }
    if arch.interaction_radius is not None:
        doc["interaction_radius"] = arch.interaction_radius
    return doc


# --- Auxiliares privados ---

def _window_span(center: int, extent: int, size: int) -> tuple[int, int]:
    extent = min(extent, size)
    start = center - (extent - 1) // 2
    start = max(0, min(start, size - extent))
    return start, start + extent


def _boxes_overlap(a, b) -> bool:
    return a[0] <= b[2] and b[0] <= a[2] and a[1] <= b[3] and b[1] <= a[3]


def _validate_zone(zone: Zone, interaction_radius: float | None):
    prefix = f"zones[{zone.id}]"
    if zone.rows < 1 or zone.cols < 1:
        raise ArchitectureValidationError(f"{prefix}: rows e cols devem ser >= 1.", field=f"{prefix}.rows", zones=(zone.id,))
    if zone.row_pitch <= 0:
        raise ArchitectureValidationError(f"{prefix}: row_pitch deve ser positivo.", field=f"{prefix}.row_pitch", zones=(zone.id,))
    if zone.col_pitch <= 0:
        raise ArchitectureValidationError(f"{prefix}: col_pitch deve ser positivo.", field=f"{prefix}.col_pitch", zones=(zone.id,))
    if zone.is_entanglement:
        if zone.pair_offset is None or not (0 < zone.pair_offset < zone.col_pitch):
            raise ArchitectureValidationError(
                f"{prefix}: pair_offset deve estar em (0, col_pitch).", field=f"{prefix}.pair_offset", zones=(zone.id,)
            )
        if interaction_radius is not None:
            if zone.pair_offset > interaction_radius:
                raise ArchitectureValidationError(
                    f"{prefix}: pair_offset maior que interaction_radius; o par não interage.",
                    field=f"{prefix}.pair_offset",
                    zones=(zone.id,),
                )
            if zone.col_pitch - zone.pair_offset <= interaction_radius:
                logger.warning(f"{prefix}: pares vizinhos estão dentro do raio de interação.")
    elif zone.pair_offset is not None:
        raise ArchitectureValidationError(
            f"{prefix}: pair_offset só é permitido em zonas de emaranhamento.", field=f"{prefix}.pair_offset", zones=(zone.id,)
        )


def _parse_zone(raw, index: int) -> Zone:
    if not isinstance(raw, dict):
        raise ArchitectureParseError(f"zones[{index}] deve ser um objeto.", field=f"zones[{index}]")
    prefix = f"zones[{index}]."
    zone_id = raw.get("id")
    if not isinstance(zone_id, str) or not zone_id:
        raise ArchitectureParseError(f"{prefix}id ausente ou inválido.", field=f"{prefix}id")
    try:
        kind = ZoneKind(raw.get("kind"))
    except ValueError:
        raise ArchitectureParseError(f"{prefix}kind inválido: {raw.get('kind')!r}.", field=f"{prefix}kind") from None
    origin = raw.get("origin")
    if not (isinstance(origin, list) and len(origin) == 2 and all(_is_number(v) for v in origin)):
        raise ArchitectureParseError(f"{prefix}origin deve ser [x, y].", field=f"{prefix}origin")
    return Zone(
        id=zone_id,
        kind=kind,
        origin=(float(origin[0]), float(origin[1])),
        rows=_integer(raw, "rows", None, prefix=prefix),
        cols=_integer(raw, "cols", None, prefix=prefix),
        row_pitch=_number(raw, "row_pitch", None, prefix=prefix, required=True),
        col_pitch=_number(raw, "col_pitch", None, prefix=prefix, required=True),
        pair_offset=_number(raw, "pair_offset", None, prefix=prefix),
    )


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _number(doc: dict, key: str, default, prefix: str = "", required: bool = False):
    if key not in doc or doc[key] is None:
        if required:
            raise ArchitectureParseError(f"Campo obrigatório ausente: {prefix}{key}.", field=f"{prefix}{key}")
        return default
    value = doc[key]
    if not _is_number(value):
        raise ArchitectureParseError(f"{prefix}{key} deve ser numérico.", field=f"{prefix}{key}")
    return float(value)


def _integer(doc: dict, key: str, default, prefix: str = "") -> int:
    if key not in doc:
        if default is None:
            raise ArchitectureParseError(f"Campo obrigatório ausente: {prefix}{key}.", field=f"{prefix}{key}")
        return default
    value = doc[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise ArchitectureParseError(f"{prefix}{key} deve ser inteiro.", field=f"{prefix}{key}")
    return value


if __name__ == "__main__":
    exemplo = {
        "zones": [
            {"id": "storage", "kind": "storage", "origin": [0, 0], "rows": 10, "cols": 10, "row_pitch": 5, "col_pitch": 5},
            {"id": "entanglement", "kind": "entanglement", "origin": [0, 100], "rows": 2, "cols": 10,
             "row_pitch": 10, "col_pitch": 20, "pair_offset": 4},
        ],
        "interaction_radius": 6,
    }
    arch_demo = load_architecture(json.dumps(exemplo))
    print(f"Zonas: {[z.id for z in arch_demo.zones]}, aceleração {arch_demo.acceleration} m/s²")
    print(f"Posição (storage, 2, 3): {arch_demo.trap_position(TrapAddress('storage', 2, 3))}")
    print(f"Posição (entanglement, 0, 1, pair_right): {arch_demo.trap_position(TrapAddress('entanglement', 0, 1, Slot.PAIR_RIGHT))}")
    candidatos = arch_demo.candidate_traps((12.0, 12.0), "storage", set(), window=(3, 3))
    print(f"Candidatas (3x3) ao redor de (12, 12): {[(c.row, c.col) for c in candidatos]}")
