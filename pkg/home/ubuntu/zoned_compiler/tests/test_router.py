# -*- coding: utf-8 -*-
import random

import pytest

from architecture.zones import Slot, TrapAddress
from optimization.compatibility import GroupSet, Movement, discretize
from optimization.placement import Placement, PlacementKind
from routing.router import (
    SOURCE,
    TARGET,
    Move,
    RearrangementStep,
    make_move,
    route_transition,
    split_ghost_batches,
    verify_step,
)
from utils.exceptions import ContractViolation, RoutingError

from conftest import build_arch, entanglement_zone, storage_zone


def _move(atom, src, dst) -> Move:
    dist = ((dst[0] - src[0]) ** 2 + (dst[1] - src[1]) ** 2) ** 0.5
    return Move(atom, TrapAddress("storage", 0, atom), TrapAddress("storage", 1, atom), src, dst, dist)


def _step(moves, occupancy=frozenset()) -> RearrangementStep:
    pickups = split_ghost_batches(moves, set(occupancy) | {m.src for m in moves}, SOURCE)
    drop_occupancy = (set(occupancy) - {m.src for m in moves}) | {m.dst for m in moves}
    drops = split_ghost_batches(moves, drop_occupancy, TARGET)
    return RearrangementStep(tuple(moves), tuple(pickups), tuple(drops), max(m.dist for m in moves))


def _replay(route, src: Placement, dst: Placement, arch):
    """Reexecuta a rota e confere cada passo, a ocupação intermediária e o estado final."""
    positions = {a: arch.trap_position(t) for a, t in src.assignment.items()}
    for step in route.steps:
        occupancy = set(positions.values())
        assert verify_step(step, occupancy)
        moving = {m.atom for m in step.movements}
        still = {p for a, p in positions.items() if a not in moving}
        for m in step.movements:
            assert positions[m.atom] == m.src
            assert m.dst not in still
        for m in step.movements:
            positions[m.atom] = m.dst
        assert len(set(positions.values())) == len(positions)
    assert positions == {a: arch.trap_position(t) for a, t in dst.assignment.items()}


@pytest.fixture
def grid_arch():
    return build_arch(
        [
            storage_zone((0, 0), 10, 10, 10),
            entanglement_zone((0, 150), 3, 5, 12, 24, 4),
        ]
    )


def test_identical_placements_need_no_steps(grid_arch):
    placement = Placement({0: TrapAddress("storage", 0, 0)}, PlacementKind.INITIAL)
    route = route_transition(placement, placement, grid_arch)
    assert route.steps == ()
    assert route.trap_transfers == 0


def test_crossing_columns_fail_verification():
    step = _step([_move(0, (0.0, 0.0), (20.0, 0.0)), _move(1, (10.0, 0.0), (5.0, 0.0))])
    assert not verify_step(step, set())


def test_merging_rows_fail_verification():
    step = _step([_move(0, (0.0, 0.0), (0.0, 50.0)), _move(1, (10.0, 10.0), (10.0, 50.0))])
    assert not verify_step(step, set())


def test_parallel_shift_passes_verification():
    step = _step([_move(0, (0.0, 0.0), (100.0, 0.0)), _move(1, (10.0, 10.0), (110.0, 10.0))])
    assert verify_step(step, set())
    assert len(step.pickup_batches) == 1


def test_bystander_on_ghost_spot_splits_the_pickup():
    moves = [_move(0, (0.0, 0.0), (100.0, 0.0)), _move(1, (10.0, 10.0), (110.0, 10.0))]
    bystander = {(10.0, 0.0)}
    batches = split_ghost_batches(moves, bystander | {m.src for m in moves}, SOURCE)
    assert sorted(map(sorted, batches)) == [[0], [1]]

    joint = RearrangementStep(tuple(moves), (frozenset({0, 1}),), (frozenset({0, 1}),), 100.0)
    assert not verify_step(joint, bystander)
    split = RearrangementStep(tuple(moves), tuple(batches), (frozenset({0, 1}),), 100.0)
    assert verify_step(split, bystander)


def test_rectangle_of_atoms_is_a_single_batch():
    moves = [_move(i, (x, y), (x + 200.0, y)) for i, (x, y) in enumerate([(0.0, 0.0), (10.0, 0.0), (0.0, 10.0), (10.0, 10.0)])]
    assert len(split_ghost_batches(moves, {m.src for m in moves}, SOURCE)) == 1


def test_batches_must_cover_every_atom():
    moves = [_move(0, (0.0, 0.0), (100.0, 0.0)), _move(1, (10.0, 0.0), (110.0, 0.0))]
    partial = RearrangementStep(tuple(moves), (frozenset({0}),), (frozenset({0, 1}),), 100.0)
    assert not verify_step(partial, set())


def test_verify_step_agrees_with_group_compatibility():
    rng = random.Random(5)
    for _ in range(500):
        cells = rng.sample([(r, c) for r in range(5) for c in range(5)], 2)
        targets = [(rng.randrange(5), rng.randrange(5) + 10) for _ in range(2)]
        moves = [_move(i, (10.0 * c, 10.0 * r), (10.0 * tc, 10.0 * tr)) for i, ((r, c), (tr, tc)) in enumerate(zip(cells, targets))]
        disc = discretize((m.atom, m.src) for m in moves)
        movements = [Movement(m.atom, disc[m.atom], targets[m.atom], m.dist) for m in moves]
        groups = GroupSet().insert(movements[0])
        expected = groups.groups[0].is_compatible(movements[1])
        assert verify_step(_step(moves), set()) == expected


def test_target_held_by_a_resting_atom_is_unroutable(grid_arch):
    src = Placement({0: TrapAddress("storage", 0, 0), 1: TrapAddress("storage", 0, 1)}, PlacementKind.INITIAL)
    dst = Placement({0: TrapAddress("storage", 0, 1), 1: TrapAddress("storage", 0, 1)}, PlacementKind.INITIAL)
    with pytest.raises(RoutingError):
        route_transition(src, dst, grid_arch)


def test_different_atom_sets_are_rejected(grid_arch):
    src = Placement({0: TrapAddress("storage", 0, 0)}, PlacementKind.INITIAL)
    dst = Placement({1: TrapAddress("storage", 0, 0)}, PlacementKind.INITIAL)
    with pytest.raises(ContractViolation):
        route_transition(src, dst, grid_arch)


def test_swap_is_routed_through_an_auxiliary_trap(grid_arch, caplog):
    a, b = TrapAddress("storage", 0, 0), TrapAddress("storage", 0, 1)
    src = Placement({0: a, 1: b}, PlacementKind.INITIAL)
    dst = Placement({0: b, 1: a}, PlacementKind.INITIAL)
    route = route_transition(src, dst, grid_arch)
    assert len(route.buffered) == 1
    assert len(route.steps) >= 3
    _replay(route, src, dst, grid_arch)
    assert any("auxiliar" in r.getMessage() for r in caplog.records)


def test_storage_to_entanglement_transition(grid_arch):
    src = Placement({i: TrapAddress("storage", 9, i) for i in range(4)}, PlacementKind.INITIAL)
    dst = Placement(
        {
            0: TrapAddress("entanglement", 0, 1, Slot.PAIR_LEFT),
            1: TrapAddress("entanglement", 0, 1, Slot.PAIR_RIGHT),
            2: TrapAddress("entanglement", 0, 2, Slot.PAIR_LEFT),
            3: TrapAddress("entanglement", 0, 2, Slot.PAIR_RIGHT),
        },
        PlacementKind.GATE,
    )
    route = route_transition(src, dst, grid_arch)
    assert len(route.steps) == 1
    assert route.trap_transfers == 2
    _replay(route, src, dst, grid_arch)


@pytest.mark.parametrize("seed", range(10))
def test_random_transitions_replay_cleanly(grid_arch, seed):
    rng = random.Random(seed)
    traps = grid_arch.traps("storage") + grid_arch.traps("entanglement")
    for _ in range(100):
        atoms = rng.randint(1, 12)
        src = Placement(dict(enumerate(rng.sample(traps, atoms))), PlacementKind.INITIAL)
        dst = Placement(dict(enumerate(rng.sample(traps, atoms))), PlacementKind.INITIAL)
        route = route_transition(src, dst, grid_arch)
        _replay(route, src, dst, grid_arch)
        movers = sum(1 for a in src.assignment if src.assignment[a] != dst.assignment[a])
        assert sum(len(s.movements) for s in route.steps) == movers + len(route.buffered)


def test_make_move_distance(grid_arch):
    move = make_move(grid_arch, 0, TrapAddress("storage", 0, 0), TrapAddress("storage", 3, 4))
    assert move.dist == pytest.approx(50.0)
    assert move.dst == (40.0, 30.0)
