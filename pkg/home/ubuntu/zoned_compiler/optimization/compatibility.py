# -*- coding: utf-8 -*-
"""
Estrutura de grupos de movimentos compatíveis.

Cada grupo guarda dois mapas ordenados (linha discreta de origem -> linha de
destino e coluna discreta de origem -> coluna de destino). Um movimento é
compatível com o grupo se, em cada eixo, a chave já existe e aponta para o
mesmo valor, ou se o novo valor fica estritamente entre os valores do
predecessor e do sucessor da chave. Isso expressa as restrições de não
cruzamento e de preservação das linhas/colunas do AOD.

Grupos e conjuntos de grupos são valores: inserir devolve uma cópia, então
nós de busca diferentes nunca compartilham estado mutável.
"""

from bisect import bisect_left
from dataclasses import dataclass, field

import numpy as np

from architecture.zones import TrapAddress

__version__ = "0.0.1"

POSITION_DECIMALS = 6


@dataclass(frozen=True)
class Movement:
    """Movimento de um átomo: coordenadas discretas de origem, linha/coluna de destino na grade e distância (µm)."""

    atom: int
    src_disc: tuple[int, int]
    dst: tuple[int, int]
    dist: float
    source: TrapAddress | None = None
    target: TrapAddress | None = None


class OrderedMapping:
    """Mapa chave -> valor mantido em ordem de chave, com consultas de predecessor e sucessor."""

    __slots__ = ("_keys", "_values")

    def __init__(self, keys=None, values=None):
        self._keys = list(keys or [])
        self._values = list(values or [])

    def copy(self) -> "OrderedMapping":
        return OrderedMapping(self._keys, self._values)

    def __len__(self) -> int:
        return len(self._keys)

    def items(self) -> list[tuple[int, int]]:
        return list(zip(self._keys, self._values))

    def get(self, key):
        i = bisect_left(self._keys, key)
        if i < len(self._keys) and self._keys[i] == key:
            return self._values[i]
        return None

    def accepts(self, key, value) -> bool:
        """Condição de compatibilidade de um eixo: igualdade exata ou valor estritamente entre os vizinhos."""
        i = bisect_left(self._keys, key)
        if i < len(self._keys) and self._keys[i] == key:
            return self._values[i] == value
        lower = self._values[i - 1] if i > 0 else -np.inf
        upper = self._values[i] if i < len(self._keys) else np.inf
        return lower < value < upper

    def put(self, key, value):
        i = bisect_left(self._keys, key)
        if i < len(self._keys) and self._keys[i] == key:
            return
        self._keys.insert(i, key)
        self._values.insert(i, value)

    def differences(self, factor: float) -> np.ndarray:
        return np.asarray(self._values, dtype=float) - factor * np.asarray(self._keys, dtype=float)


@dataclass(frozen=True)
class MovementGroup:
    """Grupo de movimentos executáveis num mesmo passo de rearranjo."""

    row_map: OrderedMapping = field(default_factory=OrderedMapping)
    col_map: OrderedMapping = field(default_factory=OrderedMapping)
    members: tuple[Movement, ...] = ()
    d_max: float = 0.0
    _sd: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def is_compatible(self, m: Movement) -> bool:
        return self.row_map.accepts(m.src_disc[0], m.dst[0]) and self.col_map.accepts(m.src_disc[1], m.dst[1])

    def with_movement(self, m: Movement) -> "MovementGroup":
        rows, cols = self.row_map.copy(), self.col_map.copy()
        rows.put(m.src_disc[0], m.dst[0])
        cols.put(m.src_disc[1], m.dst[1])
        return MovementGroup(rows, cols, self.members + (m,), max(self.d_max, m.dist))

    def sd(self, scale: tuple[float, float] = (1.0, 1.0)) -> tuple[float, float]:
        """Desvio padrão (linhas, colunas) de valor - fator · chave nos dois mapas."""
        if not self.members:
            return 0.0, 0.0
        if scale not in self._sd:
            self._sd[scale] = (
                float(np.std(self.row_map.differences(scale[0]))),
                float(np.std(self.col_map.differences(scale[1]))),
            )
        return self._sd[scale]

    def to_json(self) -> dict:
        return {
            "row_map": [list(kv) for kv in self.row_map.items()],
            "col_map": [list(kv) for kv in self.col_map.items()],
            "atoms": [m.atom for m in self.members],
            "d_max": self.d_max,
        }


@dataclass(frozen=True)
class GroupSet:
    groups: tuple[MovementGroup, ...] = ()

    def __len__(self) -> int:
        return len(self.groups)

    def place(self, m: Movement) -> tuple["GroupSet", int]:
        """Insere no primeiro grupo compatível (ou num grupo novo) e devolve o índice do grupo."""
        for i, group in enumerate(self.groups):
            if group.is_compatible(m):
                groups = self.groups[:i] + (group.with_movement(m),) + self.groups[i + 1:]
                return GroupSet(groups), i
        return GroupSet(self.groups + (MovementGroup().with_movement(m),)), len(self.groups)

    def insert(self, m: Movement) -> "GroupSet":
        return self.place(m)[0]

    def cost(self) -> float:
        """Soma de √d_max dos grupos."""
        return float(sum(np.sqrt(g.d_max) for g in self.groups))

    def max_sqrt_d_max(self) -> float:
        return float(max((np.sqrt(g.d_max) for g in self.groups), default=0.0))

    def sd_sum(self, scale: tuple[float, float]) -> float:
        """Soma dos SDs de linhas e colunas de todos os grupos."""
        return float(sum(sum(g.sd(scale)) for g in self.groups))

    def to_json(self) -> list[dict]:
        return [g.to_json() for g in self.groups]


def discretize(moving_atoms) -> dict[int, tuple[int, int]]:
    """
    Coordenadas discretas (postos densos) das origens dos átomos em movimento.

    Args:
        moving_atoms: Lista de (átomo, (x, y)) com as posições de origem em µm.

    Returns:
        dict[int, tuple[int, int]]: átomo -> (linha discreta, coluna discreta).
    """
    moving_atoms = list(moving_atoms)
    if not moving_atoms:
        return {}
    atoms = [a for a, _ in moving_atoms]
    xs = np.round([p[0] for _, p in moving_atoms], POSITION_DECIMALS)
    ys = np.round([p[1] for _, p in moving_atoms], POSITION_DECIMALS)
    _, row_rank = np.unique(ys, return_inverse=True)
    _, col_rank = np.unique(xs, return_inverse=True)
    return {a: (int(r), int(c)) for a, r, c in zip(atoms, row_rank.ravel(), col_rank.ravel())}


if __name__ == "__main__":
    # Três movimentos cruzados: o terceiro não cabe no primeiro grupo.
    movimentos = [
        Movement(0, (0, 0), (0, 1), 10.0),
        Movement(1, (0, 1), (0, 2), 10.0),
        Movement(2, (0, 2), (0, 0), 20.0),
    ]
    conjunto = GroupSet()
    for m in movimentos:
        conjunto = conjunto.insert(m)
    print(f"Grupos: {len(conjunto)}, custo = {conjunto.cost():.3f}")
    grupo = MovementGroup()
    for k, v in enumerate([0, 1, 4, 5]):
        grupo = grupo.with_movement(Movement(k, (0, k), (0, v), 1.0))
    print(f"SD das colunas com fator 2: {grupo.sd((1.0, 2.0))[1]:.3f}")
