# -*- coding: utf-8 -*-
"""Fixtures compartilhadas: arquiteturas pequenas e o cenário de reuso com três portas."""

import json

import pytest

from analysis.scheduling import TWO_QUBIT_LAYER, Layer
from architecture.zones import Slot, TrapAddress, load_architecture
from circuits.circuit import cz
from optimization.cost import NextLayerInfo
from optimization.placement import Placement, PlacementKind


def build_arch(zones, **extra):
    return load_architecture(json.dumps({"zones": zones, **extra}))


def storage_zone(origin, rows, cols, pitch, row_pitch=None, zone_id="storage"):
    return {
        "id": zone_id,
        "kind": "storage",
        "origin": list(origin),
        "rows": rows,
        "cols": cols,
        "row_pitch": row_pitch or pitch,
        "col_pitch": pitch,
    }


def entanglement_zone(origin, rows, cols, row_pitch, col_pitch, pair_offset, zone_id="entanglement"):
    return {
        "id": zone_id,
        "kind": "entanglement",
        "origin": list(origin),
        "rows": rows,
        "cols": cols,
        "row_pitch": row_pitch,
        "col_pitch": col_pitch,
        "pair_offset": pair_offset,
    }


@pytest.fixture
def example_arch():
    """Armazenamento 10x10 (pitch 5) em (0, 0); emaranhamento 2x10 em (0, 100)."""
    return build_arch(
        [
            storage_zone((0, 0), 10, 10, 5),
            entanglement_zone((0, 100), 2, 10, 10, 20, 4),
        ]
    )


@pytest.fixture
def minimal_arch():
    """Emaranhamento 2x10 em y 0..10 e armazenamento 10x10 logo acima (y 30..75)."""
    return build_arch(
        [
            entanglement_zone((0, 0), 2, 10, 10, 20, 4),
            storage_zone((0, 30), 10, 10, 5),
        ]
    )


@pytest.fixture
def tiny_arch():
    """Instância pequena o bastante para enumerar todas as colocações de uma camada."""
    return build_arch(
        [
            storage_zone((0, 0), 2, 6, 10),
            entanglement_zone((0, 40), 1, 5, 10, 20, 4),
        ],
        window={"rows": 1, "cols": 5},
    )


@pytest.fixture
def reuse_scenario():
    """
    Átomo 0 reutilizado no sítio 3 (slot esquerdo); átomos 1, 2 e 3 numa linha de armazenamento.

    A camada tem cz(0, 1) e cz(2, 3). O posicionador de base leva (2, 3) ao sítio 1 e gera dois
    passos; o ciente de roteamento usa o sítio 4 e tudo cabe num passo só.
    """
    arch = build_arch(
        [
            storage_zone((0, 0), 1, 10, 10),
            entanglement_zone((0, 50), 1, 5, 20, 20, 4),
        ],
        window={"rows": 1, "cols": 5},
    )
    prev = Placement(
        {
            0: TrapAddress("entanglement", 0, 3, Slot.PAIR_LEFT),
            1: TrapAddress("storage", 0, 0),
            2: TrapAddress("storage", 0, 2),
            3: TrapAddress("storage", 0, 3),
        },
        PlacementKind.INTERMEDIATE,
        reused=frozenset({0}),
    )
    layer = Layer(TWO_QUBIT_LAYER, (cz(0, 1), cz(2, 3)))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    return arch, prev, layer, info


@pytest.fixture
def exhaustive_best():
    """Oráculo: menor g entre todas as folhas da árvore de busca (sem heurística)."""

    def run(search):
        best = None
        stack = [search.start()]
        while stack:
            node = stack.pop()
            if search.is_goal(node):
                if best is None or node.g < best.g:
                    best = node
                continue
            item = search.items[node.depth]
            for option in search.feasible_options(node, item):
                stack.append(search.child(node, option, with_heuristic=False))
        return best

    return run
