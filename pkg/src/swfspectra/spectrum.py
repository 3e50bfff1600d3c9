"""Filtered cell presentations of spectra.

A presentation is a list of cells, each sitting at a filtration level
``0 .. L-1`` (level 0 is the bottom, i.e. the attractor end of the flow).
Cells at level ``i`` are attached to the cofiber of level ``i - 1`` by an
:class:`Attachment`: one entry per pair (upper cell u, lower cell l) giving
the class of the desuspended attaching map ``Sigma^{-1} u -> l`` as a
multiple of the generator of the relevant (cyclic) stem.  Attachments
into lower levels than ``i - 1`` are zero by construction.

Rows index the upper level's cells and columns the lower level's, both by
position within the level in cell order.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import stems
from .cells import Cell, CellKind, dual_cell, equivariant_stem
from .errors import (
    InvalidPresentation,
    MissingFlowCounts,
    UnresolvedAttachment,
    UnsupportedMorphismGroup,
    UnsupportedStem,
)

SCHEMA_VERSION = 1


class AttachmentStatus(str, enum.Enum):
    RESOLVED = "resolved"
    FORCED_ZERO = "forced_zero"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class Attachment:
    from_level: int
    entries: tuple[tuple[int, int, int], ...] = ()
    status: AttachmentStatus = AttachmentStatus.RESOLVED

    def __post_init__(self):
        object.__setattr__(self, "status", AttachmentStatus(self.status))
        ents = tuple(sorted((int(r), int(c), int(v)) for r, c, v in self.entries if v))
        object.__setattr__(self, "entries", ents)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(r, c): v for r, c, v in self.entries}

    @property
    def is_zero(self) -> bool:
        return self.status is not AttachmentStatus.UNRESOLVED and not self.entries


def attaching_stem(upper: Cell, lower: Cell) -> int:
    """Stem of ``[Sigma^{-1} upper, lower]``; raises for unsupported pairs."""
    return equivariant_stem(upper.shifted(-1), lower)


def _entry_kind(upper: Cell, lower: Cell) -> str:
    """'zero' if the morphism group vanishes, 'integer' for Z, else 'other'."""
    try:
        k = attaching_stem(upper, lower)
        order = stems.stem_order(k)
    except (UnsupportedMorphismGroup, UnsupportedStem):
        return "other"
    if order == 1:
        return "zero"
    return "integer" if order == 0 else "other"


@dataclass(frozen=True)
class SpectrumPresentation:
    cells: tuple[Cell, ...]
    levels: tuple[int, ...]
    labels: tuple[str, ...]
    attachments: tuple[Attachment, ...] = ()
    equivariant: bool = True

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        object.__setattr__(self, "levels", tuple(int(x) for x in self.levels))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "attachments", tuple(self.attachments))
        n = len(self.cells)
        if len(self.levels) != n or len(self.labels) != n:
            raise InvalidPresentation("cells, levels and labels must have equal length")
        if len(set(self.labels)) != n:
            raise InvalidPresentation("cell labels must be unique")
        L = self.num_levels
        if set(self.levels) != set(range(L)):
            raise InvalidPresentation(f"levels must be contiguous from 0, got {sorted(set(self.levels))}")
        if [a.from_level for a in self.attachments] != list(range(1, L)):
            raise InvalidPresentation("need exactly one attachment per consecutive level pair")
        if not self.equivariant and any(c.is_free or c.complex for c in self.cells):
            raise InvalidPresentation("nonequivariant presentations contain only integral spheres")
        for a in self.attachments:
            up, lo = self.level_cells(a.from_level), self.level_cells(a.from_level - 1)
            for r, c, v in a.entries:
                if not (0 <= r < len(up) and 0 <= c < len(lo)):
                    raise InvalidPresentation(f"attachment entry ({r}, {c}) out of range")
                kind = _entry_kind(self.cells[up[r]], self.cells[lo[c]])
                if kind == "zero":
                    raise InvalidPresentation("nonzero entry in a vanishing morphism group")
                if kind != "other" or a.status is not AttachmentStatus.UNRESOLVED:
                    k = attaching_stem(self.cells[up[r]], self.cells[lo[c]])
                    if stems.reduce(k, v) != v:
                        raise InvalidPresentation(f"entry {v} not reduced modulo the order of pi_{k}")
            forced = all(
                _entry_kind(self.cells[u], self.cells[l]) == "zero" for u in up for l in lo
            )
            if forced and a.status is not AttachmentStatus.FORCED_ZERO:
                raise InvalidPresentation(f"attachment into level {a.from_level - 1} must be forced_zero")
            if not forced and a.status is AttachmentStatus.FORCED_ZERO:
                raise InvalidPresentation("forced_zero attachment over a nonvanishing group")

    @property
    def num_levels(self) -> int:
        return max(self.levels) + 1 if self.levels else 0

    def level_cells(self, level: int) -> list[int]:
        return [i for i, lv in enumerate(self.levels) if lv == level]

    def attachment(self, from_level: int) -> Attachment:
        return self.attachments[from_level - 1]

    def is_wedge(self) -> bool:
        return all(a.is_zero for a in self.attachments)

    def is_resolved(self) -> bool:
        return all(a.status is not AttachmentStatus.UNRESOLVED for a in self.attachments)

    def require_resolved(self) -> None:
        for a in self.attachments:
            if a.status is AttachmentStatus.UNRESOLVED:
                raise UnresolvedAttachment(
                    f"attachment from level {a.from_level} is unresolved (needs framing data)"
                )

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    def entries_by_label(self) -> dict[tuple[str, str], int]:
        out = {}
        for a in self.attachments:
            up, lo = self.level_cells(a.from_level), self.level_cells(a.from_level - 1)
            for r, c, v in a.entries:
                out[self.labels[up[r]], self.labels[lo[c]]] = v
        return out

    def __str__(self) -> str:
        return describe(self)


def assemble(
    cells: Iterable[Cell],
    levels: Iterable[int],
    labels: Iterable[str],
    entries: Mapping[tuple[str, str], int],
    unresolved_levels: Iterable[int] = (),
    equivariant: bool = True,
) -> SpectrumPresentation:
    """Build a presentation from label-keyed attachment entries.

    Empty levels are squeezed out, entries are reduced into their groups,
    and each attachment's status is derived: forced_zero when every group
    vanishes, unresolved when requested, resolved otherwise.
    """
    cells, levels, labels = list(cells), list(levels), list(labels)
    unresolved = set(unresolved_levels)
    used = sorted(set(levels))
    renum = {lv: i for i, lv in enumerate(used)}
    new_levels = [renum[lv] for lv in levels]
    unresolved = {renum[lv] for lv in unresolved if lv in renum}
    index = {lab: i for i, lab in enumerate(labels)}
    per_level: dict[int, list[int]] = {}
    for i, lv in enumerate(new_levels):
        per_level.setdefault(lv, []).append(i)
    atts = []
    for top in range(1, len(used)):
        up, lo = per_level[top], per_level[top - 1]
        pos_up = {i: r for r, i in enumerate(up)}
        pos_lo = {i: c for c, i in enumerate(lo)}
        ents = []
        for (u, l), v in entries.items():
            iu, il = index.get(u), index.get(l)
            if iu in pos_up and il in pos_lo and v:
                kind = _entry_kind(cells[iu], cells[il])
                if kind == "zero":
                    continue
                if kind == "integer" or top not in unresolved:
                    v = stems.reduce(attaching_stem(cells[iu], cells[il]), v)
                ents.append((pos_up[iu], pos_lo[il], v))
        forced = all(_entry_kind(cells[u], cells[l]) == "zero" for u in up for l in lo)
        if forced:
            status = AttachmentStatus.FORCED_ZERO
        elif top in unresolved:
            status = AttachmentStatus.UNRESOLVED
        else:
            status = AttachmentStatus.RESOLVED
        atts.append(Attachment(top, tuple(ents), status))
    return SpectrumPresentation(tuple(cells), tuple(new_levels), tuple(labels), tuple(atts), equivariant)


def single_cell(cell: Cell, label: str = "theta") -> SpectrumPresentation:
    return SpectrumPresentation((cell,), (0,), (label,), (), True)


def wedge(cells: Iterable[Cell], labels: Iterable[str] | None = None, equivariant: bool = True):
    cells = list(cells)
    labels = list(labels) if labels is not None else [f"e{i}" for i in range(len(cells))]
    return SpectrumPresentation(tuple(cells), (0,) * len(cells), tuple(labels), (), equivariant)


# -- Morse data ------------------------------------------------------------


class PointKind(str, enum.Enum):
    REDUCIBLE = "reducible"
    IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class CriticalPoint:
    id: str
    kind: PointKind
    index: Fraction
    level: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", PointKind(self.kind))
        object.__setattr__(self, "index", Fraction(self.index))
        if self.level is not None:
            object.__setattr__(self, "level", Fraction(self.level))
        if self.kind is PointKind.IRREDUCIBLE and self.index.denominator != 1:
            raise InvalidPresentation(f"irreducible {self.id} needs an integer index")

    @property
    def filtration(self) -> Fraction:
        """Position in the energy ordering; defaults to the Morse index."""
        return self.index if self.level is None else self.level

    def cell(self) -> Cell:
        if self.kind is PointKind.REDUCIBLE:
            # absolute index -2n of the reducible gives the sphere S^{-nC}
            return Cell.sphere(0, self.index / 2)
        return Cell.free(int(self.index))


@dataclass(frozen=True)
class MorseData:
    """Critical points and signed flow-line counts, taken modulo the circle action.

    ``flow_counts[(x, y)]`` counts flow lines from ``x`` down to ``y``.
    """

    points: tuple[CriticalPoint, ...]
    flow_counts: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "flow_counts", dict(self.flow_counts))
        ids = [p.id for p in self.points]
        if len(set(ids)) != len(ids):
            raise InvalidPresentation("critical point ids must be unique")
        if sum(p.kind is PointKind.REDUCIBLE for p in self.points) > 1:
            raise InvalidPresentation("at most one reducible critical point")
        by_id = {p.id: p for p in self.points}
        for (x, y) in self.flow_counts:
            if x not in by_id or y not in by_id:
                raise InvalidPresentation(f"flow count between unknown points {x!r}, {y!r}")
            if by_id[x].filtration <= by_id[y].filtration:
                raise InvalidPresentation(f"flow {x} -> {y} must go down in filtration")

    def point(self, pid: str) -> CriticalPoint:
        return next(p for p in self.points if p.id == pid)


def is_simple(data: MorseData) -> bool:
    """True when all Morse indices lie in two consecutive values."""
    idx = sorted({p.index for p in data.points})
    return len(idx) <= 1 or (len(idx) == 2 and idx[1] - idx[0] == 1)


def _all_vanish(uppers, lowers) -> bool:
    return all(_entry_kind(u.cell(), l.cell()) == "zero" for u in uppers for l in lowers)


def build_from_morse(data: MorseData) -> SpectrumPresentation:
    """Stable presentation from critical points and flow counts.

    Points are grouped by filtration value.  Consecutive groups of
    irreducibles whose mutual attaching maps all live in vanishing groups
    are wedged together into one level; every other group starts a new
    level.  Integer-valued attaching maps come from the flow counts, maps
    into vanishing groups are forced to zero, and anything else (torsion
    stems, which need framing data) is left unresolved.
    """
    groups: dict[Fraction, list[CriticalPoint]] = {}
    for p in data.points:
        groups.setdefault(p.filtration, []).append(p)
    blocks: list[list[CriticalPoint]] = []
    for value in sorted(groups):
        pts = groups[value]
        if blocks:
            prev = blocks[-1]
            irreducible = all(p.kind is PointKind.IRREDUCIBLE for p in prev + pts)
            if irreducible and _all_vanish(pts, prev):
                prev.extend(pts)
                continue
        blocks.append(list(pts))

    cells, levels, labels = [], [], []
    for lv, block in enumerate(blocks):
        for p in block:
            cells.append(p.cell())
            levels.append(lv)
            labels.append(p.id)

    entries: dict[tuple[str, str], int] = {}
    unresolved = set()
    for lv in range(1, len(blocks)):
        for u in blocks[lv]:
            for l in blocks[lv - 1]:
                kind = _entry_kind(u.cell(), l.cell())
                if kind == "zero":
                    continue
                count = data.flow_counts.get((u.id, l.id))
                if kind == "integer":
                    if count is None:
                        raise MissingFlowCounts(f"no flow count supplied for {u.id} -> {l.id}")
                    entries[u.id, l.id] = count
                else:
                    unresolved.add(lv)
    _normalize_signs(blocks, entries)
    return assemble(cells, levels, labels, entries, unresolved)


def _normalize_signs(blocks, entries) -> None:
    """Reorient lower cells so the first nonzero integer entry into each is positive.

    Flipping a cell's orientation is a self-equivalence of the wedge, so the
    stable type is unchanged.  Work top-down so a flip is carried into the
    attachment below before that one is normalized.
    """
    for lv in range(len(blocks) - 1, 0, -1):
        for l in blocks[lv - 1]:
            col = [(u.id, entries[u.id, l.id]) for u in blocks[lv] if (u.id, l.id) in entries]
            if col and col[0][1] < 0:
                for key in list(entries):
                    if l.id in key:
                        entries[key] = -entries[key]


# -- structural operations ---------------------------------------------------


def _swap_part(label: str) -> str:
    if label.endswith(".bot"):
        return label[:-4] + ".top"
    if label.endswith(".top"):
        return label[:-4] + ".bot"
    return label


def dualize(p: SpectrumPresentation) -> SpectrumPresentation:
    """Spanier-Whitehead dual: dual cells, reversed filtration, transposed attachments.

    Attachment values are carried over unchanged; for the integer entries
    that matter this is the identification of a degree with its dual degree.
    After forgetting, the bottom sphere of a free cell dualizes to the top
    sphere of the dual free cell, so ``.bot``/``.top`` labels swap.
    """
    p.require_resolved()
    L = p.num_levels
    cells = tuple(dual_cell(c) for c in p.cells)
    levels = tuple(L - 1 - lv for lv in p.levels)
    labels = tuple(_swap_part(x) for x in p.labels)
    atts = []
    for new_top in range(1, L):
        old = p.attachment(L - new_top)
        ents = tuple((c, r, v) for r, c, v in old.entries)
        atts.append(Attachment(new_top, ents, old.status))
    return SpectrumPresentation(cells, levels, labels, tuple(atts), p.equivariant)


def suspend(p: SpectrumPresentation, m: int = 0, q=0) -> SpectrumPresentation:
    """Suspend by ``m`` real and ``q`` complex dimensions."""
    q = Fraction(q)
    cells = tuple(c.shifted(m, q) for c in p.cells)
    return SpectrumPresentation(cells, p.levels, p.labels, p.attachments, p.equivariant)


# -- text and JSON -----------------------------------------------------------


def _wedge_str(cells) -> str:
    return " v ".join(str(c) for c in cells) if cells else "*"


def describe(p: SpectrumPresentation) -> str:
    """Human-readable form.  Wedges print top level first, e.g. ``S^0 v T+[0] v T+[0]``."""
    order = sorted(range(len(p.cells)), key=lambda i: -p.levels[i])
    if p.is_wedge():
        return _wedge_str([p.cells[i] for i in order])
    parts = []
    for lv in range(p.num_levels - 1, -1, -1):
        cells = [p.cells[i] for i in p.level_cells(lv)]
        line = f"level {lv}: {_wedge_str(cells)}"
        if lv > 0:
            a = p.attachment(lv)
            up, lo = p.level_cells(lv), p.level_cells(lv - 1)
            mat = a.as_dict()
            rows = [[mat.get((r, c), 0) for c in range(len(lo))] for r in range(len(up))]
            line += f"  attached by {rows} ({a.status.value})"
        parts.append(line)
    return "\n".join(parts)


def to_document(p: SpectrumPresentation) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "equivariant": p.equivariant,
        "cells": [
            {
                "kind": c.kind.value,
                "realDim": c.real,
                "complexNum": c.complex.numerator,
                "complexDen": c.complex.denominator,
                "level": lv,
                "label": lab,
            }
            for c, lv, lab in zip(p.cells, p.levels, p.labels)
        ],
        "attachments": [
            {
                "fromLevel": a.from_level,
                "entries": [{"row": r, "col": c, "value": v} for r, c, v in a.entries],
                "status": a.status.value,
            }
            for a in p.attachments
        ],
    }


def from_document(doc: Mapping) -> SpectrumPresentation:
    if doc.get("version") != SCHEMA_VERSION:
        raise InvalidPresentation(f"unsupported presentation version {doc.get('version')!r}")
    try:
        cells = tuple(
            Cell(CellKind(c["kind"]), c["realDim"], Fraction(c["complexNum"], c["complexDen"]))
            for c in doc["cells"]
        )
        levels = tuple(c["level"] for c in doc["cells"])
        labels = tuple(c.get("label", f"e{i}") for i, c in enumerate(doc["cells"]))
        atts = tuple(
            Attachment(
                a["fromLevel"],
                tuple((e["row"], e["col"], e["value"]) for e in a["entries"]),
                AttachmentStatus(a["status"]),
            )
            for a in doc["attachments"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidPresentation(f"malformed presentation document: {exc}") from exc
    return SpectrumPresentation(cells, levels, labels, atts, bool(doc.get("equivariant", True)))


def to_json(p: SpectrumPresentation) -> str:
    return json.dumps(to_document(p), sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> SpectrumPresentation:
    return from_document(json.loads(text))
