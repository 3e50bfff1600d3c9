"""Forgetting the circle action.

Each free cell ``Sigma^m(T+)`` splits as ``S^m v S^{m+1}`` (labels
``<id>.bot`` and ``<id>.top``).  An equivariant attaching class splits
along these summands as follows:

* trivial -> free: the whole class sits on the top sphere; a generator of
  ``[S^{-1}, Sigma^{-2} T+]^T = Z`` forgets to ``(0, 1)`` in
  ``pi_{-1}(S^{-2} v S^{-1}) = Z/2 + Z``;
* free -> trivial: the whole class sits on the bottom sphere (the dual rule);
* free -> free: the class acts diagonally, bottom to bottom and top to top.

Afterwards, every integer attaching entry equal to +-1 between two spheres
of the same dimension is cancelled: the cofiber of a degree one map is
contractible, so the two spheres drop out and the remaining entries pick
up the correction ``f[u][l] - f[u][l0] * e * f[u0][l]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import stems
from .cells import Cell
from .errors import AmbiguousExtension
from .spectrum import SpectrumPresentation, assemble, attaching_stem


@dataclass(frozen=True)
class Cancellation:
    upper: str
    lower: str
    unit: int
    # lower-level entries of the cancelled upper sphere: label -> (value, stem)
    row: tuple[tuple[str, int, int], ...]


@dataclass(frozen=True)
class ForgetResult:
    presentation: SpectrumPresentation
    split: SpectrumPresentation
    steps: tuple[Cancellation, ...]

    def transport(self, comps: Mapping[str, int], k: int) -> dict[str, int]:
        """Carry a class of ``pi_k`` of the split wedge part through the cancellations.

        ``comps`` maps sphere labels of the split presentation to multiples
        of the generator of ``pi_{k - dim}``.
        """
        deg = {lab: c.integral_dim() for lab, c in zip(self.split.labels, self.split.cells)}
        w = {lab: stems.reduce(k - deg[lab], comps.get(lab, 0)) for lab in self.split.labels}
        for step in self.steps:
            if w.pop(step.upper, 0):
                raise AmbiguousExtension(
                    f"class has a component on {step.upper}, which is not a wedge summand"
                )
            w0 = step.unit * w.pop(step.lower)
            s0 = k - deg[step.lower]
            for lab, value, s in step.row:
                if lab in w:
                    w[lab] = stems.reduce(k - deg[lab], w[lab] - stems.multiply(s, value, s0, w0))
        return {lab: w.get(lab, 0) for lab in self.presentation.labels}


def split_components(cell: Cell, label: str, value: int) -> dict[str, int]:
    """Components of an equivariant class ``S^k -> cell`` on the split spheres."""
    if cell.is_free:
        return {f"{label}.bot": 0, f"{label}.top": value}
    return {label: value}


def _split(p: SpectrumPresentation) -> SpectrumPresentation:
    if not p.equivariant:
        return p
    cells, levels, labels = [], [], []
    for c, lv, lab in zip(p.cells, p.levels, p.labels):
        if c.is_free:
            cells += [Cell.sphere(c.real), Cell.sphere(c.real + 1)]
            labels += [f"{lab}.bot", f"{lab}.top"]
            levels += [lv, lv]
        else:
            cells.append(Cell.sphere(c.integral_dim()))
            labels.append(lab)
            levels.append(lv)
    entries = {}
    for (u, l), v in p.entries_by_label().items():
        cu, cl = p.cells[p.label_index(u)], p.cells[p.label_index(l)]
        if cu.is_free and cl.is_free:
            pairs = [(f"{u}.bot", f"{l}.bot"), (f"{u}.top", f"{l}.top")]
        elif cu.is_free:
            pairs = [(f"{u}.bot", l)]
        elif cl.is_free:
            pairs = [(u, f"{l}.top")]
        else:
            pairs = [(u, l)]
        for key in pairs:
            entries[key] = v
    return assemble(cells, levels, labels, entries, equivariant=False)


def forget_with_steps(p: SpectrumPresentation) -> ForgetResult:
    p.require_resolved()
    split = _split(p)
    cells = dict(zip(split.labels, split.cells))
    level = dict(zip(split.labels, split.levels))
    order = list(split.labels)
    entries = dict(split.entries_by_label())
    steps = []

    def stem(u, l):
        return attaching_stem(cells[u], cells[l])

    while True:
        pivot = None
        for u in order:
            for l in order:
                v = entries.get((u, l), 0)
                if abs(v) != 1 or stem(u, l) != 0:
                    continue
                # u must not receive attachments and l must not send any
                if any(key[1] == u for key in entries) or any(key[0] == l for key in entries):
                    continue
                pivot = (u, l)
        if pivot is None:
            break
        u0, l0 = pivot
        unit = entries[u0, l0]
        row = tuple((l, v, stem(u0, l)) for (u, l), v in entries.items() if u == u0 and l != l0)
        col = [(u, v) for (u, l), v in entries.items() if l == l0 and u != u0]
        for u, a in col:
            for l, b, s in row:
                s1 = stem(u, l0)
                entries[u, l] = entries.get((u, l), 0) - stems.multiply(s1, a, s, unit * b)
        entries = {key: v for key, v in entries.items() if u0 not in key and l0 not in key}
        for key in list(entries):
            entries[key] = stems.reduce(stem(*key), entries[key])
        order = [x for x in order if x not in (u0, l0)]
        steps.append(Cancellation(u0, l0, unit, row))

    # canonical order: by level, then larger spheres first
    order.sort(key=lambda lab: (level[lab], -abs(cells[lab].real)))
    pres = assemble(
        [cells[x] for x in order], [level[x] for x in order], order, entries, equivariant=False
    )
    return ForgetResult(pres, split, tuple(steps))


def forget(p: SpectrumPresentation) -> SpectrumPresentation:
    """Nonequivariant presentation, simplified by cancelling degree +-1 attachments."""
    return forget_with_steps(p).presentation
