"""Group files: a small text format for permutation groups.

Layout (cycles are 1-indexed; '#' starts a comment):

    name S5            # optional label
    order 120          # optional, re-verified on load
    degree 5
    generators
    (1 2)
    (1 2 3 4 5)
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .bsgs import PermGroup, bsgs_build
from .errors import DEFAULT_CAPS, Caps, DataError, InputError
from .perm import Permutation


@dataclass(frozen=True)
class GroupFile:
    name: str
    degree: int
    generator_strings: tuple[str, ...]
    declared_order: int | None = None

    def build(self, caps: Caps = DEFAULT_CAPS) -> PermGroup:
        gens = [Permutation.parse(s, self.degree) for s in self.generator_strings]
        group = bsgs_build(gens, self.degree, caps=caps)
        if self.declared_order is not None and group.order != self.declared_order:
            raise DataError(
                f"group file {self.name!r}: declared order {self.declared_order} "
                f"but generators produce order {group.order}"
            )
        return group


def parse_group_text(text: str, name: str = "") -> GroupFile:
    degree = None
    declared_order = None
    gens: list[str] = []
    in_generators = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_generators:
            gens.append(line)
            continue
        key, _, value = line.partition(" ")
        key = key.lower()
        if key == "name":
            name = value.strip() or name
        elif key == "degree":
            try:
                degree = int(value)
            except ValueError:
                raise InputError(f"bad degree line: {raw!r}")
        elif key == "order":
            try:
                declared_order = int(value)
            except ValueError:
                raise InputError(f"bad order line: {raw!r}")
        elif key == "generators":
            in_generators = True
        elif key == "gen":
            gens.append(value.strip())
        else:
            raise InputError(f"unrecognized group-file line: {raw!r}")
    if degree is None or degree < 1:
        raise InputError("group file must declare a positive degree")
    return GroupFile(name=name, degree=degree, generator_strings=tuple(gens),
                     declared_order=declared_order)


def load_group_file(path, caps: Caps = DEFAULT_CAPS) -> tuple[GroupFile, PermGroup]:
    path = Path(path)
    spec = parse_group_text(path.read_text(), name=path.stem)
    return spec, spec.build(caps=caps)


def format_group(group: PermGroup, name: str = "") -> str:
    lines = []
    if name:
        lines.append(f"name {name}")
    lines.append(f"order {group.order}")
    lines.append(f"degree {group.degree}")
    lines.append("generators")
    lines.extend(g.cycle_string() for g in group.generators)
    return "\n".join(lines) + "\n"
