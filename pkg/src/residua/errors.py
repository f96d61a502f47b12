"""Exception types and computation caps shared across the toolkit.

Every brute-force routine is guarded by an explicit cap so that a request
that cannot be answered exactly fails loudly instead of silently guessing.
"""

from __future__ import annotations

from dataclasses import dataclass


class ResiduaError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ResiduaError):
    """Malformed input: bad permutation, bad group file, bad descriptor."""


class DataError(ResiduaError):
    """Bundled or user-supplied data failed schema or invariant validation."""


class CapExceeded(ResiduaError):
    """A computation would exceed a configured cap (element, subgroup, degree)."""


class UndecidableAtScale(CapExceeded):
    """A membership question has no fast path and the group exceeds the oracle cap."""


class VerificationFailure(ResiduaError):
    """An inequality or structural check that should hold did not."""


@dataclass(frozen=True)
class Caps:
    """Configurable limits for brute-force work.

    element_cap   - largest group order admitted to exhaustive element listing
    subgroup_cap  - largest group order admitted to full subgroup-lattice search
    degree_cap    - largest point set for explicitly constructed permutation groups
                    (coset actions are bounded by element_cap instead)
    """

    element_cap: int = 50_000
    subgroup_cap: int = 1_000
    degree_cap: int = 64


DEFAULT_CAPS = Caps()
