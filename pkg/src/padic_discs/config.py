"""Experiment configurations shared by scripts/ and the acceptance tests."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SweepConfig:
    """Closed-form distance against the oracle."""

    primes: tuple = (3, 5, 7)
    pairs_per_class: int = 200
    seed: int = 2024


@dataclass(frozen=True)
class IsometryConfig:
    p: int = 5
    group_elements: int = 100
    pairs: int = 50
    seed: int = 7


@dataclass(frozen=True)
class MetricConfig:
    primes: tuple = (3, 5, 7)
    triples: int = 500
    seed: int = 11


@dataclass(frozen=True)
class TreeConfig:
    primes: tuple = (3, 5)
    pairs: int = 200
    covariance_cases: int = 100
    long_lines: int = 50
    points_per_line: int = 5
    seed: int = 13


@dataclass(frozen=True)
class TriangleConfig:
    primes: tuple = (3, 5, 7)
    pairs: int = 200
    seed: int = 17


@dataclass(frozen=True)
class OrbitConfig:
    primes: tuple = (3, 5, 7)
    points: int = 200
    seed: int = 19


@dataclass(frozen=True)
class IwasawaConfig:
    primes: tuple = (3, 5)
    words: int = 200
    seed: int = 23


@dataclass(frozen=True)
class DualityConfig:
    primes: tuple = (3, 5, 7)
    vectors: int = 500
    seed: int = 29


@dataclass(frozen=True)
class CircleConfig:
    p: int = 5
    alpha: str = "eps"
    configurations: int = 100
    seed: int = 31


@dataclass(frozen=True)
class StabilizerConfig:
    primes: tuple = (3, 5, 7)
    elements: int = 100
    seed: int = 37
