"""Edge-disjoint T-path packing with verifiable certificates."""

from fractions import Fraction

from ._core import (
    Instance,
    TPathsError,
    certificate_json,
    decompose,
    is_inner_eulerian,
    max_packing_size,
    parse,
    read,
    solve,
    terminal_lambdas,
    verify,
)
from ._core import mader_min as _mader_min

__all__ = [
    "Instance",
    "TPathsError",
    "certificate_json",
    "decompose",
    "is_inner_eulerian",
    "mader_min",
    "max_packing_size",
    "parse",
    "read",
    "solve",
    "terminal_lambdas",
    "verify",
]


def mader_min(instance, max_free_vertices=8):
    """Minimum Mader bound as a Fraction, with a minimising partition."""
    num, den, parts = _mader_min(instance, max_free_vertices)
    return Fraction(num, den), parts
