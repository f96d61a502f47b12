"""Permutations of {0, ..., n-1}.

A permutation is stored as its image tuple.  Products compose left to right:
(p * q) first applies p, then q.  Cycle notation in files and in printed
output is 1-indexed; everything internal is 0-indexed.
"""

from __future__ import annotations

import re
from math import lcm

from .errors import InputError

_CYCLE_RE = re.compile(r"\(\s*([0-9][0-9\s,]*)?\)")


class Permutation:
    """An immutable permutation of fixed degree."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise InputError("permutation degree must be positive")
        seen = [False] * n
        for i in images:
            if not isinstance(i, int) or not 0 <= i < n or seen[i]:
                raise InputError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[i] = True
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> Permutation:
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles) -> Permutation:
        """Build a permutation from 0-indexed disjoint-or-not cycles."""
        images = list(range(degree))
        for cycle in cycles:
            cycle = list(cycle)
            for point in cycle:
                if not 0 <= point < degree:
                    raise InputError(f"cycle point {point} out of range for degree {degree}")
            if len(set(cycle)) != len(cycle):
                raise InputError(f"repeated point in cycle {cycle}")
            # apply this cycle after what was accumulated so far
            cmap = {cycle[i]: cycle[(i + 1) % len(cycle)] for i in range(len(cycle))}
            images = [cmap.get(x, x) for x in images]
        return Permutation(images)

    @staticmethod
    def parse(text: str, degree: int) -> Permutation:
        """Parse 1-indexed cycle notation, e.g. "(1 2 3)(4 5)" or "()"."""
        stripped = text.strip()
        if stripped in ("", "()"):
            return Permutation.identity(degree)
        cycles = []
        for match in _CYCLE_RE.finditer(stripped):
            body = match.group(1)
            if body is None:
                continue
            points = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
            if any(point < 1 for point in points):
                raise InputError(f"cycle notation is 1-indexed: {text!r}")
            cycles.append([point - 1 for point in points])
        leftover = _CYCLE_RE.sub("", stripped).strip()
        if leftover:
            raise InputError(f"could not parse permutation {text!r}")
        return Permutation.from_cycles(degree, cycles)

    def __mul__(self, other: Permutation) -> Permutation:
        """Apply self, then other."""
        a, b = self.images, other.images
        if len(a) != len(b):
            raise InputError("degree mismatch in product")
        return Permutation(b[i] for i in a)

    def inverse(self) -> Permutation:
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Permutation(images)

    def __pow__(self, n: int) -> Permutation:
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def conjugate(self, h: Permutation) -> Permutation:
        """Return h^-1 * self * h."""
        return h.inverse() * self * h

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self):
        return [i for i, j in enumerate(self.images) if i != j]

    def smallest_moved(self):
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point, sorted."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            point = self.images[start]
            while point != start:
                seen.add(point)
                cycle.append(point)
                point = self.images[point]
            out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        """1-indexed cycle notation as used in group files."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)

    def extend(self, degree: int) -> Permutation:
        """Re-embed fixing any added points."""
        if degree < self.degree:
            raise InputError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.degree, degree)))

    def shift(self, offset: int, degree: int) -> Permutation:
        """Embed acting on [offset, offset + self.degree), fixing the rest."""
        if offset + self.degree > degree:
            raise InputError("shifted permutation does not fit the degree")
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[offset + i] = offset + j
        return Permutation(images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"

    def __str__(self) -> str:
        return self.cycle_string()
