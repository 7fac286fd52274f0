"""Python access to the bnsigma core.

Presentations are passed as text (``"<x1,x2 | [x1,x2]>"``) and characters as
lists of integers. Structured results come back as plain dicts.
"""

import json

from . import _core
from ._core import Error

__all__ = [
    "Error",
    "parse_presentation",
    "first_betti",
    "character_lattice",
    "small_cancellation",
    "decide",
    "symmetry_report",
    "insert_commutators",
    "remove_commutators",
    "fox_matrix",
    "count_cyclically_reduced",
    "run_experiment",
    "growth",
]


def parse_presentation(text):
    return json.loads(_core.parse_presentation(text))


def first_betti(text):
    return _core.first_betti(text)


def character_lattice(text):
    return _core.character_lattice(text)


def small_cancellation(text):
    """(passes, max piece ratio as a (num, den) pair) for C'(1/6)."""
    passes, num, den = _core.small_cancellation(text)
    return passes, (num, den)


def decide(text, phi, no_zero_divisors=False):
    return json.loads(_core.decide(text, list(phi), no_zero_divisors))


def symmetry_report(text, phi=None, no_zero_divisors=False):
    return json.loads(_core.symmetry_report(text, None if phi is None else list(phi), no_zero_divisors))


def insert_commutators(text, phi):
    return json.loads(_core.insert_commutators(text, list(phi)))


def remove_commutators(text, phi):
    return json.loads(_core.remove_commutators(text, list(phi)))


def fox_matrix(text, phi=None):
    return json.loads(_core.fox_matrix(text, None if phi is None else list(phi)))


def count_cyclically_reduced(gens, length):
    return int(_core.count_cyclically_reduced(gens, length))


def run_experiment(gens, rels, max_length, trials, seed, threads=1):
    """Returns (report dict, CSV text)."""
    report, csv = _core.run_experiment(gens, rels, max_length, trials, seed, threads)
    return json.loads(report), csv


def growth(automorphism, word, iterations=64):
    return json.loads(_core.growth(automorphism, word, iterations))
