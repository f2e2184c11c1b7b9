"""Sphere profiles, the closed-form count, and ball sizes."""

import itertools
import math
import random

import pytest

from blockperm.enumeration import (
    ball_size_bounds,
    ball_size_exact,
    enumerate_spheres,
    myers_count,
    sphere_profile_from_payload,
    sphere_profile_payload,
)
from blockperm.perm import block_distance


def test_sphere_profile_small_frozen():
    assert enumerate_spheres(1).counts == (1,)
    assert enumerate_spheres(3).counts == (1, 2, 3)
    assert enumerate_spheres(4).counts == (1, 3, 9, 11)


@pytest.mark.parametrize("n", range(1, 8))
def test_sphere_profile_mass_and_center(n):
    profile = enumerate_spheres(n)
    assert profile.counts[0] == 1
    assert sum(profile.counts) == math.factorial(n)


@pytest.mark.parametrize("n", range(3, 7))
def test_sphere_profile_matches_closed_formula(n):
    profile = enumerate_spheres(n)
    for k in range(1, n):
        assert profile.counts[k] == myers_count(n, k)


def test_myers_count_frozen_values():
    assert myers_count(4, 1) == 3
    assert myers_count(4, 3) == 11
    assert myers_count(5, 2) == 18


@pytest.mark.parametrize("bad_k", [0, 4, -1])
def test_myers_count_range(bad_k):
    with pytest.raises(ValueError):
        myers_count(4, bad_k)


def test_enumerate_spheres_guard():
    with pytest.raises(ValueError):
        enumerate_spheres(9)
    assert enumerate_spheres(9, max_n=9).counts[0] == 1  # override allowed


def test_parallel_enumeration_matches_serial():
    serial = enumerate_spheres(6, workers=1)
    parallel = enumerate_spheres(6, workers=3)
    assert serial == parallel


def test_ball_size_exact_frozen():
    assert ball_size_exact(4, 1).size == 4
    assert ball_size_exact(4, 0).size == 1
    assert ball_size_exact(4, 3).size == 24
    with pytest.raises(ValueError):
        ball_size_exact(4, 4)


def test_ball_sizes_strictly_increase():
    profile = enumerate_spheres(6)
    sizes = [profile.ball(t) for t in range(6)]
    assert sizes == sorted(set(sizes))
    assert sizes[-1] == 720


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ball_size_is_center_independent(n):
    rng = random.Random(31 + n)
    perms = list(itertools.permutations(range(1, n + 1)))
    profile = enumerate_spheres(n)
    for _ in range(5):
        center = rng.choice(perms)
        for t in range(n):
            around = sum(1 for p in perms if block_distance(center, p) <= t)
            assert around == profile.ball(t)


def test_ball_size_bounds_frozen():
    assert ball_size_bounds(4, 1) == (3, 12)
    assert ball_size_bounds(5, 0) == (1, 5)
    assert ball_size_bounds(13, 4) == (11880, 154440)


def test_ball_size_bounds_hypothesis_errors():
    with pytest.raises(ValueError):
        ball_size_bounds(4, 2)  # (4-2-1)^2 = 1 < 4
    with pytest.raises(ValueError):
        ball_size_bounds(2, 0)  # (2-0-1)^2 = 1 < 2
    with pytest.raises(ValueError):
        ball_size_bounds(5, -1)


@pytest.mark.parametrize("n", range(3, 8))
def test_sandwich_contains_exact_ball(n):
    profile = enumerate_spheres(n)
    for t in range(n):
        if n - t - 1 < 0 or (n - t - 1) ** 2 < n:
            continue
        lower, upper = ball_size_bounds(n, t)
        assert lower <= profile.ball(t) <= upper


def test_sphere_profile_payload_round_trip():
    profile = enumerate_spheres(5)
    assert sphere_profile_from_payload(sphere_profile_payload(profile)) == profile
