"""Bundled, validated datasets.

Three data families live under residua/data and are re-verified on every
load, so nothing downstream ever trusts a raw file:

  simple_groups.txt   nonabelian simple groups: name|order|out|fingerprint,
                      complete for all orders up to the complete_below marker;
  primitive_groups.txt  generators for every primitive group of degree 5-12;
  corpus/*.grp        the verification corpus in the group-file format.

The minimal-simple test implements the classification patterns
PSL(2,2^p), PSL(2,3^p), PSL(2,p) with p = +-2 mod 5, Sz(2^p), PSL(3,3).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path

from .bsgs import PermGroup, bsgs_build, is_primitive
from .errors import DEFAULT_CAPS, Caps, DataError
from .exact import is_prime
from .groupio import load_group_file
from .perm import Permutation

_DATA_ENV = "RESIDUA_DATA"


def data_dir(override=None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(_DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


@dataclass(frozen=True)
class SimpleGroupRecord:
    """One nonabelian finite simple group: order and automorphism data."""

    name: str
    order: int
    out_order: int
    fingerprint: frozenset[int] | None = None

    @property
    def aut_order(self) -> int:
        # |Aut(S)| = |S| * |Out(S)| for nonabelian simple S
        return self.order * self.out_order

    def validate(self):
        if self.order < 60 or self.out_order < 1:
            raise DataError(f"implausible simple-group record {self}")
        # Kohl's inequality |Out(S)| < log2|S|, tested exactly
        if 2 ** self.out_order >= self.order:
            raise DataError(
                f"record {self.name}: out order {self.out_order} violates "
                f"|Out| < log2(order) for order {self.order}"
            )
        if self.fingerprint is not None and 1 not in self.fingerprint:
            raise DataError(f"record {self.name}: fingerprint lacks the identity order")


@dataclass(frozen=True)
class SimpleTable:
    """The simple-group table plus its completeness horizon."""

    records: tuple[SimpleGroupRecord, ...]
    complete_below: int

    def __iter__(self):
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def by_name(self, name: str) -> SimpleGroupRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise DataError(f"no simple group named {name!r} in the table")

    def orders(self) -> list[int]:
        return sorted(r.order for r in self.records)


_table_cache: dict[str, SimpleTable] = {}


def load_simple_table(path=None) -> SimpleTable:
    path = Path(path) if path else data_dir() / "simple_groups.txt"
    cached = _table_cache.get(str(path))
    if cached is not None:
        return cached
    records = []
    complete_below = None
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("complete_below"):
            complete_below = int(line.split()[1])
            continue
        parts = line.split("|")
        if len(parts) != 4:
            raise DataError(f"bad simple-group row: {raw!r}")
        name, order, out, fp = (p.strip() for p in parts)
        fingerprint = None
        if fp != "-":
            fingerprint = frozenset(int(tok) for tok in fp.split(","))
        rec = SimpleGroupRecord(name, int(order), int(out), fingerprint)
        rec.validate()
        records.append(rec)
    if complete_below is None:
        raise DataError("simple-group table lacks a complete_below marker")
    records.sort(key=lambda r: (r.order, r.name))
    for a, b in zip(records, records[1:]):
        if a.order == b.order and a.fingerprint == b.fingerprint:
            raise DataError(f"ambiguous order {a.order} without distinguishing fingerprints")
    table = SimpleTable(tuple(records), complete_below)
    _table_cache[str(path)] = table
    return table


@dataclass(frozen=True)
class PrimitiveEntry:
    degree: int
    label: str
    order: int
    source: str
    generator_strings: tuple[str, ...]

    def build(self, caps: Caps = DEFAULT_CAPS) -> PermGroup:
        gens = [Permutation.parse(s, self.degree) for s in self.generator_strings]
        return bsgs_build(gens, self.degree, caps=caps)


@dataclass(frozen=True)
class PrimitiveCatalog:
    """Primitive groups of degrees 5..12, each re-verified at load time."""

    entries: tuple[PrimitiveEntry, ...]

    def degrees(self) -> list[int]:
        return sorted({e.degree for e in self.entries})

    def at_degree(self, n: int) -> list[PrimitiveEntry]:
        found = [e for e in self.entries if e.degree == n]
        if not found:
            raise DataError(f"primitive catalog has no entries of degree {n}")
        return found


def load_primitive_catalog(path=None, caps: Caps = DEFAULT_CAPS,
                           verify: bool = True) -> PrimitiveCatalog:
    path = Path(path) if path else data_dir() / "primitive_groups.txt"
    entries = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("|")
        if len(parts) != 5:
            raise DataError(f"bad primitive-catalog row: {raw!r}")
        degree, label, order, source, gens = (p.strip() for p in parts)
        entry = PrimitiveEntry(
            degree=int(degree),
            label=label,
            order=int(order),
            source=source,
            generator_strings=tuple(g.strip() for g in gens.split(";")),
        )
        entries.append(entry)
    catalog = PrimitiveCatalog(tuple(entries))
    missing = set(range(5, 13)) - set(catalog.degrees())
    if missing:
        raise DataError(f"primitive catalog is missing degrees {sorted(missing)}")
    if verify:
        for entry in entries:
            group = entry.build(caps=caps)
            if group.order != entry.order:
                raise DataError(
                    f"primitive entry {entry.label} (degree {entry.degree}): "
                    f"declared order {entry.order}, generators give {group.order}"
                )
            if not group.is_transitive():
                raise DataError(f"primitive entry {entry.label} is not transitive")
            if not is_primitive(group):
                raise DataError(f"primitive entry {entry.label} is not primitive")
    return catalog


def load_corpus(path=None, caps: Caps = DEFAULT_CAPS):
    """The verification corpus: list of (name, PermGroup), order-verified."""
    directory = Path(path) if path else data_dir() / "corpus"
    out = []
    for file in sorted(directory.glob("*.grp")):
        spec, group = load_group_file(file, caps=caps)
        out.append((spec.name, group))
    if not out:
        raise DataError(f"no corpus group files found under {directory}")
    return out


# -- Thompson's minimal simple groups ---------------------------------------

_PSL2_RE = re.compile(r"^PSL\(2,\s*(\d+)\)$")


def _prime_power(q: int):
    """(p, k) with q = p^k, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p == 0:
            k = 0
            n = q
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
    return (q, 1)


def is_minimal_simple(name: str) -> bool:
    """Membership in Thompson's minimal-simple families, by name pattern.

    Families: PSL(2,2^p) p prime; PSL(2,3^p) p odd prime; PSL(2,p) for
    p > 3 prime with p = 2,3 mod 5; Sz(2^p) p odd prime; PSL(3,3).
    A5 is admitted as PSL(2,4).
    """
    name = name.strip()
    if name == "A5":
        return True  # A5 = PSL(2,4)
    if name == "PSL(3,3)":
        return True
    match = _PSL2_RE.match(name)
    if match:
        q = int(match.group(1))
        if q == 4:
            return True
        pk = _prime_power(q)
        if pk is None:
            return False
        p, k = pk
        if p == 2:
            return is_prime(k)
        if p == 3:
            return is_prime(k) and k % 2 == 1
        if k == 1:
            return p > 3 and p % 5 in (2, 3)
        return False
    match = re.match(r"^Sz\((\d+)\)$", name)
    if match:
        pk = _prime_power(int(match.group(1)))
        return pk is not None and pk[0] == 2 and is_prime(pk[1]) and pk[1] % 2 == 1
    return False
