"""Rank-two semigroups, atomic representations and their graphs."""

from ._rank2sg import *  # noqa: F401,F403
from ._rank2sg import DomainError, Theta, Rep

__all__ = [name for name in dir() if not name.startswith("_")]
