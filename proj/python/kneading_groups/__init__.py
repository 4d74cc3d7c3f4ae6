"""Automaton groups K_v and K_{w,v} built from kneading data."""

from ._core import (
    Automaton,
    DomainError,
    KneadingGroup,
    NonContractingError,
    doubling_orbit,
    group_from_angle,
    itinerary,
    kneading_sequence,
)


def kv(v=""):
    return KneadingGroup.kv(v)


def kwv(w, v):
    return KneadingGroup.kwv(w, v)


__all__ = [
    "Automaton",
    "DomainError",
    "KneadingGroup",
    "NonContractingError",
    "doubling_orbit",
    "group_from_angle",
    "itinerary",
    "kneading_sequence",
    "kv",
    "kwv",
]
