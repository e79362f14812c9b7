# -*- coding: utf-8 -*-
import random

import numpy as np
import pytest

from architecture.zones import TrapAddress
from optimization.compatibility import GroupSet, Movement, MovementGroup, OrderedMapping, discretize
from routing.router import SOURCE, TARGET, Move, RearrangementStep, split_ghost_batches, verify_step


def _group(*movements) -> MovementGroup:
    group = MovementGroup()
    for m in movements:
        group = group.with_movement(m)
    return group


def _as_move(m: Movement) -> Move:
    # chaves e destinos (linha, coluna) viram pontos (x, y) da grade
    src = (float(m.src_disc[1]), float(m.src_disc[0]))
    dst = (float(m.dst[1]), float(m.dst[0]))
    return Move(m.atom, TrapAddress("storage", *m.src_disc), TrapAddress("storage", *m.dst), src, dst, m.dist)


def _valid_step(movements) -> bool:
    """Oráculo: os movimentos formam um passo que o verificador do roteador aceita."""
    moves = [_as_move(m) for m in movements]
    pickups = split_ghost_batches(moves, {m.src for m in moves}, SOURCE)
    drops = split_ghost_batches(moves, {m.dst for m in moves}, TARGET)
    step = RearrangementStep(tuple(moves), tuple(pickups), tuple(drops), max(m.dist for m in moves))
    return verify_step(step, set())


def _first_fit(movements) -> list[list[Movement]]:
    groups: list[list[Movement]] = []
    for m in movements:
        for members in groups:
            if _valid_step(members + [m]):
                members.append(m)
                break
        else:
            groups.append([m])
    return groups


def _random_movements(rng: random.Random, count: int) -> list[Movement]:
    sources = rng.sample([(r, c) for r in range(6) for c in range(6)], count)
    return [
        Movement(i, src, (rng.randrange(8), rng.randrange(8)), float(rng.uniform(1, 100)))
        for i, src in enumerate(sources)
    ]


def test_existing_row_key_with_other_value_is_incompatible():
    group = _group(Movement(0, (0, 2), (0, 2), 1.0), Movement(1, (0, 4), (0, 3), 1.0))
    assert not group.is_compatible(Movement(2, (0, 5), (1, 9), 1.0))


def test_new_column_value_must_be_strictly_between_neighbours():
    group = _group(Movement(0, (0, 2), (0, 2), 1.0), Movement(1, (0, 4), (0, 3), 1.0))
    assert not group.is_compatible(Movement(2, (0, 3), (0, 2), 1.0))
    assert not group.is_compatible(Movement(2, (0, 3), (0, 3), 1.0))


def test_new_keys_on_the_outside_are_compatible():
    group = _group(Movement(0, (1, 2), (4, 2), 1.0))
    assert group.is_compatible(Movement(1, (0, 3), (2, 7), 1.0))
    assert group.is_compatible(Movement(1, (2, 0), (9, 0), 1.0))


def test_crossing_movements_need_two_groups():
    movements = [
        Movement(0, (0, 0), (0, 1), 10.0),
        Movement(1, (0, 1), (0, 2), 10.0),
        Movement(2, (0, 2), (0, 0), 20.0),
    ]
    groups = GroupSet()
    for m in movements:
        groups = groups.insert(m)
    assert len(groups) == 2
    assert [m.atom for m in groups.groups[0].members] == [0, 1]
    assert groups.cost() == pytest.approx(np.sqrt(10) + np.sqrt(20))


def test_insert_does_not_mutate_the_original():
    groups = GroupSet().insert(Movement(0, (0, 0), (0, 0), 4.0))
    bigger = groups.insert(Movement(1, (0, 1), (0, 1), 9.0))
    assert len(groups.groups[0].members) == 1
    assert len(groups.groups[0].row_map) == 1
    assert bigger.groups[0].d_max == 9.0


@pytest.mark.parametrize("seed", range(5))
def test_compatibility_agrees_with_the_step_verifier(seed):
    rng = random.Random(seed)
    for _ in range(2000):
        movements = _random_movements(rng, rng.randint(2, 8))
        *members, candidate = movements
        groups = GroupSet()
        for m in members:
            groups = groups.insert(m)
        for group in groups.groups:
            assert group.is_compatible(candidate) == _valid_step(list(group.members) + [candidate])


@pytest.mark.parametrize("seed", range(5))
def test_insert_matches_first_fit_oracle(seed):
    rng = random.Random(100 + seed)
    for _ in range(500):
        movements = _random_movements(rng, rng.randint(1, 8))
        groups = GroupSet()
        for m in movements:
            groups = groups.insert(m)
        expected = _first_fit(movements)
        assert [[m.atom for m in g.members] for g in groups.groups] == [[m.atom for m in g] for g in expected]
        for group in groups.groups:
            assert group.d_max == max(m.dist for m in group.members)


def test_sd_of_evenly_spread_columns_is_zero_with_matching_factor():
    group = _group(*(Movement(k, (0, k), (0, 2 * k), 1.0) for k in range(4)))
    assert group.sd((1.0, 2.0)) == (0.0, 0.0)


def test_sd_values_for_contracting_and_spreading_columns():
    spread = _group(*(Movement(k, (0, k), (0, v), 1.0) for k, v in enumerate([0, 1, 4, 5])))
    packed = _group(*(Movement(k, (0, k), (0, k), 1.0) for k in range(4)))
    assert spread.sd((1.0, 2.0))[1] == pytest.approx(0.5)
    assert packed.sd((1.0, 2.0))[1] == pytest.approx(1.118, abs=1e-3)


def test_sd_of_single_and_empty_groups():
    assert MovementGroup().sd() == (0.0, 0.0)
    assert _group(Movement(0, (3, 4), (7, 9), 1.0)).sd((2.0, 2.0)) == (0.0, 0.0)


def test_ordered_mapping_accepts_on_the_edges():
    mapping = OrderedMapping()
    assert mapping.accepts(5, -100)
    mapping.put(5, 10)
    assert mapping.accepts(4, 9) and not mapping.accepts(4, 10)
    assert mapping.accepts(6, 11) and not mapping.accepts(6, 10)
    assert mapping.get(5) == 10 and mapping.get(4) is None


def test_discretize_uses_dense_ranks():
    disc = discretize([(7, (0.0, 50.0)), (8, (30.0, 10.0)), (9, (30.0, 50.0))])
    assert disc == {7: (1, 0), 8: (0, 1), 9: (1, 1)}


def test_sd_is_cached_per_scale():
    group = _group(*(Movement(k, (0, k), (0, v), 1.0) for k, v in enumerate([0, 1, 4, 5])))
    first = group.sd((1.0, 2.0))
    assert group.sd((1.0, 2.0)) is first
    assert group.sd((1.0, 1.0)) != first
    assert group.with_movement(Movement(4, (0, 4), (0, 9), 1.0)).sd((1.0, 2.0)) != first
