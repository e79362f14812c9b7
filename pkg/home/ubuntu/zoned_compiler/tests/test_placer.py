# -*- coding: utf-8 -*-
import json
import logging
import random

import pytest

from analysis.scheduling import TWO_QUBIT_LAYER, Layer
from architecture.zones import Architecture, Slot, TrapAddress, ZoneKind
from circuits.circuit import cz
from optimization.astar import SearchNode, astar
from optimization.baseline import place_baseline
from optimization.compatibility import GroupSet
from optimization.cost import NextLayerInfo
from optimization.layer_search import GateLayerSearch
from optimization.options import PROFILES, PlacerParams, parse_window
from optimization.placement import Placement, PlacementKind, check_placement, load_placement, place_initial
from optimization.routing_aware import RoutingAwarePlacer, place_gate_layer, place_intermediate
from routing.router import route_transition
from utils.exceptions import CapacityError, ContractViolation, SearchBudgetExceeded

from conftest import build_arch, entanglement_zone, storage_zone


def ent(row, col, slot=Slot.PAIR_LEFT, zone="entanglement"):
    return TrapAddress(zone, row, col, slot)


def sto(row, col, zone="storage"):
    return TrapAddress(zone, row, col)


def layer_of(*pairs) -> Layer:
    return Layer(TWO_QUBIT_LAYER, tuple(cz(a, b) for a, b in pairs))


def _random_instance(rng: random.Random, arch):
    gates = rng.randint(1, 3)
    atoms = 2 * gates + rng.randint(0, 2)
    traps = rng.sample(arch.traps("storage"), atoms)
    prev = Placement(dict(enumerate(traps)), PlacementKind.INITIAL)
    order = list(range(atoms))
    rng.shuffle(order)
    layer = layer_of(*((order[2 * i], order[2 * i + 1]) for i in range(gates)))
    return prev, layer, NextLayerInfo({}, frozenset(), dict(prev.assignment))


# --- Colocação inicial ---

def test_initial_placement_fills_row_nearest_to_entanglement(minimal_arch):
    placement = place_initial(4, minimal_arch)
    assert placement.kind == PlacementKind.INITIAL
    assert placement.assignment == {i: sto(0, i) for i in range(4)}
    check_placement(placement, minimal_arch)


def test_initial_placement_is_deterministic_and_injective(example_arch):
    first, second = place_initial(37, example_arch), place_initial(37, example_arch)
    assert first == second
    assert len(first.occupied()) == 37
    assert first.assignment[0] == sto(9, 0)


def test_initial_placement_without_room(example_arch):
    with pytest.raises(CapacityError):
        place_initial(101, example_arch)
    assert place_initial(0, example_arch).assignment == {}


# --- Parâmetros ---

def test_profiles_and_overrides():
    params = PlacerParams.from_profile("large", gamma=2.0, alpha=None)
    assert (params.alpha, params.beta, params.gamma, params.delta) == (0.2, 0.8, 2.0, 0.9)
    assert PlacerParams().to_dict()["delta"] == PROFILES["qasmbench"]["delta"]
    with pytest.raises(ContractViolation):
        PlacerParams(alpha=-1)
    with pytest.raises(ContractViolation):
        PlacerParams.from_profile("unknown")


def test_parse_window():
    assert parse_window("4x7") == (4, 7)
    for text in ("4", "0x3", "ax2"):
        with pytest.raises(ValueError):
            parse_window(text)


# --- Colocação de portas ---

def test_single_gate_matches_exhaustive_search(minimal_arch, exhaustive_best):
    prev = place_initial(2, minimal_arch)
    layer = layer_of((0, 1))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    params = PlacerParams()
    placement = place_gate_layer(prev, layer, info, minimal_arch, params)
    best = exhaustive_best(GateLayerSearch(minimal_arch, prev, layer, info, params))
    assert placement.cost == pytest.approx(best.g)
    check_placement(placement, minimal_arch, [(0, 1)])


def test_reuse_aware_placement_needs_a_single_step(reuse_scenario):
    arch, prev, layer, info = reuse_scenario
    placement = place_gate_layer(prev, layer, info, arch, PlacerParams())
    assert placement.assignment[0] == ent(0, 3)
    assert placement.assignment[1] == ent(0, 3, Slot.PAIR_RIGHT)
    assert placement.assignment[2] == ent(0, 4)
    assert placement.assignment[3] == ent(0, 4, Slot.PAIR_RIGHT)
    assert placement.reused == frozenset({0})
    check_placement(placement, arch, [(0, 1), (2, 3)])
    assert len(route_transition(prev, placement, arch).steps) == 1


def test_baseline_placement_needs_two_steps(reuse_scenario):
    arch, prev, layer, info = reuse_scenario
    placement = place_baseline(prev, layer, info, arch)
    assert placement.assignment[1] == ent(0, 3, Slot.PAIR_RIGHT)
    assert placement.assignment[2] == ent(0, 1)
    assert placement.assignment[3] == ent(0, 1, Slot.PAIR_RIGHT)
    check_placement(placement, arch, [(0, 1), (2, 3)])
    assert len(route_transition(prev, placement, arch).steps) == 2


def test_gate_between_two_reused_atoms_moves_the_closer_one(minimal_arch):
    prev = Placement({0: ent(0, 0), 1: ent(0, 3), 2: sto(0, 0)}, PlacementKind.INTERMEDIATE, frozenset({0, 1}))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    placement = place_gate_layer(prev, layer_of((0, 1)), info, minimal_arch, PlacerParams())
    assert placement.assignment[0] == ent(0, 0)
    assert placement.assignment[1] == ent(0, 0, Slot.PAIR_RIGHT)
    assert placement.assignment[2] == sto(0, 0)


def test_reused_atom_without_gate_is_rejected(minimal_arch):
    prev = Placement({0: ent(0, 0), 1: sto(0, 0), 2: sto(0, 1)}, PlacementKind.INTERMEDIATE, frozenset({0}))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    with pytest.raises(ContractViolation):
        place_gate_layer(prev, layer_of((1, 2)), info, minimal_arch, PlacerParams())


def test_gate_placement_is_deterministic(minimal_arch):
    prev = place_initial(8, minimal_arch)
    layer = layer_of((0, 5), (1, 2), (3, 7), (4, 6))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    first = place_gate_layer(prev, layer, info, minimal_arch, PlacerParams())
    second = place_gate_layer(prev, layer, info, minimal_arch, PlacerParams())
    assert first == second
    check_placement(first, minimal_arch, [(0, 5), (1, 2), (3, 7), (4, 6)])


def test_search_targets_use_the_entanglement_grid(minimal_arch):
    prev = place_initial(8, minimal_arch)
    layer = layer_of((0, 1), (2, 3), (4, 5), (6, 7))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    search = GateLayerSearch(minimal_arch, prev, layer, info, PlacerParams())
    assert search.movement(0, ent(0, 0)).dst == (0, 0)
    assert search.movement(7, ent(0, 3, Slot.PAIR_RIGHT)).dst == (0, 7)
    groups = GroupSet()
    for k in range(4):
        groups = groups.insert(search.movement(2 * k, ent(0, k)))
        groups = groups.insert(search.movement(2 * k + 1, ent(0, k, Slot.PAIR_RIGHT)))
    # colunas 0..7 do armazenamento em slots vizinhos: um grupo sem dispersão
    assert len(groups) == 1
    assert groups.sd_sum(search.scale) == 0.0


def test_candidate_traps_are_searched_once_per_gate(minimal_arch, monkeypatch):
    calls = []
    original = Architecture.candidate_traps

    def counting(self, *args, **kwargs):
        calls.append(args[1])
        return original(self, *args, **kwargs)

    monkeypatch.setattr(Architecture, "candidate_traps", counting)
    prev = place_initial(8, minimal_arch)
    layer = layer_of((0, 5), (1, 2), (3, 7), (4, 6))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    placement = place_gate_layer(prev, layer, info, minimal_arch, PlacerParams())
    check_placement(placement, minimal_arch, [(0, 5), (1, 2), (3, 7), (4, 6)])
    assert calls == ["entanglement"] * 4


def test_exhausted_window_recomputes_free_sites():
    arch = build_arch(
        [storage_zone((0, 0), 1, 4, 10), entanglement_zone((0, 40), 1, 5, 10, 20, 4)],
        window={"rows": 1, "cols": 1},
    )
    prev = place_initial(4, arch)
    layer = layer_of((0, 3), (1, 2))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    for placement in (place_gate_layer(prev, layer, info, arch, PlacerParams()), place_baseline(prev, layer, info, arch)):
        check_placement(placement, arch, [(0, 3), (1, 2)])
        assert placement.assignment[0].site != placement.assignment[1].site


def _check_against_exhaustive(arch, exhaustive_best, instances, seed):
    rng = random.Random(seed)
    params = PlacerParams(alpha=0.0, delta=0.0)
    for _ in range(instances):
        prev, layer, info = _random_instance(rng, arch)
        found = astar(GateLayerSearch(arch, prev, layer, info, params), params.max_nodes)
        best = exhaustive_best(GateLayerSearch(arch, prev, layer, info, params))
        assert found.g == pytest.approx(best.g)


def test_astar_is_optimal_without_accelerating_terms(tiny_arch, exhaustive_best):
    _check_against_exhaustive(tiny_arch, exhaustive_best, 40, seed=1)


@pytest.mark.slow
def test_astar_is_optimal_on_many_small_instances(tiny_arch, exhaustive_best):
    _check_against_exhaustive(tiny_arch, exhaustive_best, 200, seed=2)


# --- Limite de nós ---

class _ToyProblem:
    def __init__(self):
        self.goal = SearchNode(g=10.0, depth=2)

    def start(self):
        return SearchNode()

    def is_goal(self, node):
        return node.depth == 2

    def successors(self, node):
        if node.depth == 0:
            return [self.goal, SearchNode(g=0.0, depth=1)]
        return [SearchNode(g=node.g + 100.0, depth=2)]


def test_budget_exhaustion_carries_best_goal():
    problem = _ToyProblem()
    with pytest.raises(SearchBudgetExceeded) as info:
        astar(problem, max_nodes=1)
    assert info.value.best_goal is problem.goal
    assert astar(problem, max_nodes=10) is problem.goal


def test_incumbent_ends_the_search_once_nothing_cheaper_is_open():
    problem = _ToyProblem()
    cheap = SearchNode(g=5.0, depth=2)
    assert astar(problem, max_nodes=10, incumbent=cheap) is cheap
    assert astar(problem, max_nodes=10, incumbent=SearchNode(g=50.0, depth=2)) is problem.goal
    with pytest.raises(SearchBudgetExceeded) as info:
        astar(problem, max_nodes=1, incumbent=SearchNode(g=50.0, depth=2))
    assert info.value.best_goal is problem.goal


def test_tiny_budget_keeps_the_dive_result(minimal_arch):
    prev = place_initial(6, minimal_arch)
    layer = layer_of((0, 1), (2, 3), (4, 5))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    params = PlacerParams(max_nodes=1)
    dive = GateLayerSearch(minimal_arch, prev, layer, info, params).dive()
    placement = RoutingAwarePlacer(minimal_arch, params).place_gate_layer(prev, layer, info)
    assert placement.cost <= dive.g + 1e-9
    check_placement(placement, minimal_arch, [(0, 1), (2, 3), (4, 5)])


def test_larger_budget_never_raises_the_cost(minimal_arch):
    prev = place_initial(10, minimal_arch)
    layer = layer_of((0, 9), (1, 4), (2, 7), (3, 8), (5, 6))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    costs = [
        RoutingAwarePlacer(minimal_arch, PlacerParams(max_nodes=budget)).place_gate_layer(prev, layer, info).cost
        for budget in (1, 5, 50, 500)
    ]
    assert costs == sorted(costs, reverse=True)

def test_budget_without_goal_falls_back_to_baseline(minimal_arch, caplog, monkeypatch):
    monkeypatch.setattr(GateLayerSearch, "dive", lambda self: None)
    prev = place_initial(6, minimal_arch)
    layer = layer_of((0, 1), (2, 3), (4, 5))
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    params = PlacerParams(max_nodes=1)
    with caplog.at_level(logging.WARNING):
        placement = RoutingAwarePlacer(minimal_arch, params).place_gate_layer(prev, layer, info)
    assert placement == place_baseline(prev, layer, info, minimal_arch, params)
    assert any(r.levelno == logging.WARNING for r in caplog.records)


# --- Colocação intermediária ---

def test_intermediate_without_entanglement_atoms_keeps_the_placement(minimal_arch):
    prev = place_initial(3, minimal_arch)
    placement = place_intermediate(prev, NextLayerInfo(), minimal_arch, PlacerParams())
    assert placement.kind == PlacementKind.INTERMEDIATE
    assert placement.assignment == prev.assignment


def test_unmarked_atom_goes_to_the_nearest_storage_trap(minimal_arch):
    prev = Placement({0: ent(1, 2), 1: sto(0, 0)}, PlacementKind.GATE)
    info = NextLayerInfo({}, frozenset(), dict(prev.assignment))
    placement = place_intermediate(prev, info, minimal_arch, PlacerParams())
    assert placement.assignment[0] == sto(0, 8)
    assert placement.reused == frozenset()
    check_placement(placement, minimal_arch)


def test_marked_pair_with_same_next_gate_stays(minimal_arch):
    prev = Placement({0: ent(1, 0), 1: ent(1, 0, Slot.PAIR_RIGHT), 2: sto(0, 0)}, PlacementKind.GATE)
    info = NextLayerInfo({0: 1, 1: 0}, frozenset({0, 1}), dict(prev.assignment))
    placement = place_intermediate(prev, info, minimal_arch, PlacerParams())
    assert placement.reused == frozenset({0, 1})
    assert placement.assignment == prev.assignment


def test_site_mates_with_different_next_partners_are_not_both_reused(minimal_arch):
    prev = Placement(
        {0: ent(0, 0), 1: ent(0, 0, Slot.PAIR_RIGHT), 2: sto(0, 0), 3: sto(0, 1)},
        PlacementKind.GATE,
    )
    info = NextLayerInfo({0: 2, 2: 0, 1: 3, 3: 1}, frozenset({0, 1}), dict(prev.assignment))
    placement = place_intermediate(prev, info, minimal_arch, PlacerParams())
    assert not {0, 1} <= placement.reused
    check_placement(placement, minimal_arch)


def test_distant_next_partner_makes_reuse_lose():
    arch = build_arch(
        [
            storage_zone((0, 0), 2, 60, 20, row_pitch=10),
            entanglement_zone((1100, 50), 1, 3, 10, 20, 4),
        ]
    )
    prev = Placement(
        {0: ent(0, 0), 1: ent(0, 0, Slot.PAIR_RIGHT), 2: sto(0, 1), 3: sto(0, 0)},
        PlacementKind.GATE,
    )
    info = NextLayerInfo({0: 3, 3: 0}, frozenset({0}), dict(prev.assignment))
    placement = place_intermediate(prev, info, arch, PlacerParams())
    assert 0 not in placement.reused
    assert placement.atoms_in(arch, ZoneKind.ENTANGLEMENT) == []


def test_check_placement_rejects_broken_gate_pairs(minimal_arch):
    bad = Placement({0: ent(0, 0), 1: ent(0, 1, Slot.PAIR_RIGHT)}, PlacementKind.GATE)
    with pytest.raises(ContractViolation):
        check_placement(bad, minimal_arch, [(0, 1)])
    stray = Placement({0: ent(0, 0)}, PlacementKind.INTERMEDIATE)
    with pytest.raises(ContractViolation):
        check_placement(stray, minimal_arch)


def test_load_placement_reads_the_json_form(reuse_scenario):
    arch, prev, _, _ = reuse_scenario
    loaded = load_placement(json.dumps(prev.to_json()), arch)
    assert loaded == prev
    assert loaded.assignment[0].slot == Slot.PAIR_LEFT


@pytest.mark.parametrize(
    "doc",
    [
        "{not json",
        json.dumps({"kind": "gate", "assignment": {}, "reused": []}),
        json.dumps({"kind": "intermediate", "assignment": {"0": {"zone": "entanglement", "row": 0, "col": 3, "slot": "pair_left"}}}),
        json.dumps({"kind": "initial"}),
    ],
)
def test_load_placement_rejects_bad_documents(reuse_scenario, doc):
    arch = reuse_scenario[0]
    with pytest.raises(ContractViolation):
        load_placement(doc, arch)
