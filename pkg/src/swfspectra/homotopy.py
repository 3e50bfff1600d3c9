"""Homotopy groups of presentations via the long exact sequence of a cofibration.

For an attachment ``f: Sigma^{-1} B_u -> B_l`` between two wedges the
cofiber X sits in

    pi_k(Sigma^{-1} B_u) --f--> pi_k(B_l) --> pi_k(X) --> pi_{k-1}(Sigma^{-1} B_u) --f--> pi_{k-1}(B_l)

so ``pi_k(X)`` is an extension of ``ker f_{k-1}`` by ``coker f_k``.  The
extension is only resolved when it is forced: the cokernel vanishes, or
the kernel is free and the sequence splits.  Otherwise
:class:`AmbiguousExtension` is raised.

Generators of the result are either *cell* generators (the class of a
sphere mapping onto a cell of a wedge summand) or *lift* generators (a
chosen lift of a kernel element on the upper cells).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import stems
from .cells import Cell, equivariant_stem
from .errors import AmbiguousExtension, UnsupportedMorphismGroup
from .forget import forget_with_steps, split_components
from .spectrum import SpectrumPresentation, attaching_stem
from .zlinalg import (
    FGAbelianGroup,
    GroupElement,
    IntegerMatrix,
    Quotient,
    column_space_basis,
    kernel,
    matrix_from_columns,
    presented_group,
    quotient,
    solve_in_lattice,
)


@dataclass(frozen=True)
class Generator:
    kind: str  # "cell" or "lift"
    label: str
    order: int
    vector: tuple[tuple[str, int], ...] = ()  # lift: coefficients on upper cells


@dataclass(frozen=True)
class PieceAudit:
    upper_level: int
    image_dies: bool
    boundary_in_kernel: bool
    ranks_balance: bool

    @property
    def ok(self) -> bool:
        return self.image_dies and self.boundary_in_kernel and self.ranks_balance


@dataclass(frozen=True)
class HomotopyGroup:
    presentation: SpectrumPresentation
    degree: int
    equivariant: bool
    generators: tuple[Generator, ...]
    quotient: Quotient
    audits: tuple[PieceAudit, ...] = ()

    @property
    def group(self) -> FGAbelianGroup:
        return self.quotient.group

    def element(self, coords: Sequence[int]) -> GroupElement:
        return self.group.element(coords)

    def generator_vector(self, x: GroupElement) -> list[int]:
        return self.quotient.lift(x)

    def cell_components(self, x: GroupElement) -> dict[str, int]:
        """Multiples of the cell generators representing x; lift parts must vanish."""
        vec = self.generator_vector(x)
        out = {}
        for g, c in zip(self.generators, vec):
            c = c % g.order if g.order else c
            if g.kind == "lift":
                if c:
                    raise AmbiguousExtension(
                        f"class involves the lifted generator {g.label}, which has no cell representative"
                    )
                continue
            out[g.label] = c
        return out

    def from_cell_components(self, comps: Mapping[str, int]) -> GroupElement:
        vec = [comps.get(g.label, 0) if g.kind == "cell" else 0 for g in self.generators]
        return self.quotient.project(vec)

    def __str__(self) -> str:
        return str(self.group)


def _sphere(k: int) -> Cell:
    return Cell.sphere(k)


def _cell_order(k: int, cell: Cell) -> tuple[int, int]:
    s = equivariant_stem(_sphere(k), cell)
    return s, stems.stem_order(s)


def _compose(k: int, upper: Cell, lower: Cell, value: int) -> int:
    """Coefficient of ``attach o gen`` where gen generates ``[S^k, Sigma^{-1} upper]``."""
    src = upper.shifted(-1)
    s1 = equivariant_stem(_sphere(k), src)
    s2 = attaching_stem(upper, lower)
    target = equivariant_stem(_sphere(k), lower)
    if stems.stem_order(s1) == 1 or value == 0:
        return 0
    if s1 + s2 != target:
        # S^k -> free cell -> trivial cell passes through a transfer
        raise UnsupportedMorphismGroup(
            f"composite S^{k} -> {src} -> {lower} crosses a transfer; not modelled"
        )
    return stems.multiply(s1, 1, s2, value)


def _pieces(p: SpectrumPresentation) -> list[int]:
    """Upper levels of nonzero attachments; each must sit on a plain wedge."""
    tops = [a.from_level for a in p.attachments if not a.is_zero]
    for t in tops:
        if t - 1 in tops:
            raise AmbiguousExtension(
                f"levels {t - 2}..{t} form a multi-stage tower; lifting attachments "
                "through it needs more than degree data"
            )
    return tops


def homotopy_group(p: SpectrumPresentation, k: int, equivariant: bool = True) -> HomotopyGroup:
    """``pi_k`` (equivariant ``pi_k^T`` when asked) with generator bookkeeping.

    Nonequivariant groups are computed on :func:`forget` of the presentation,
    and their cell generators refer to the forgotten spheres.
    """
    p.require_resolved()
    if not equivariant and p.equivariant:
        p = forget_with_steps(p).presentation
    tops = _pieces(p)
    upper_cells = {i for t in tops for i in p.level_cells(t)}

    gens: list[Generator] = []
    index_of_cell: dict[int, int] = {}
    for i, (c, lab) in enumerate(zip(p.cells, p.labels)):
        if i in upper_cells:
            continue
        _, order = _cell_order(k, c)
        index_of_cell[i] = len(gens)
        gens.append(Generator("cell", lab, order))

    extra_relations: list[list[int]] = []
    lift_blocks = []
    audits = []
    for t in tops:
        up, lo = p.level_cells(t), p.level_cells(t - 1)
        att = p.attachment(t).as_dict()

        def fmat(kk):
            cols = []
            for r, u in enumerate(up):
                cols.append([_compose(kk, p.cells[u], p.cells[l], att.get((r, c), 0))
                             for c, l in enumerate(lo)])
            return cols

        Fk = fmat(k)
        for col in Fk:
            rel = [0] * len(gens)
            for c, l in enumerate(lo):
                rel[index_of_cell[l]] = col[c]
            extra_relations.append(rel)

        # kernel of f_{k-1} on pi_{k-1}(Sigma^{-1} B_u)
        src_orders = [_cell_order(k - 1, p.cells[u].shifted(-1))[1] for u in up]
        tgt_orders = [_cell_order(k - 1, p.cells[l])[1] for l in lo]
        F = matrix_from_columns(fmat(k - 1), len(lo)) if up else IntegerMatrix.zeros(len(lo), 0)
        tgt_rel = [[o if j == i else 0 for j in range(len(lo))] for i, o in enumerate(tgt_orders) if o]
        big = matrix_from_columns(F.columns() + [[-x for x in r] for r in tgt_rel], len(lo))
        K = kernel(big)
        src_rel = [[o if j == i else 0 for j in range(len(up))] for i, o in enumerate(src_orders) if o]
        spans = [col[:len(up)] for col in K.columns()] + src_rel
        B = column_space_basis(matrix_from_columns(spans, len(up)))
        coeffs = [solve_in_lattice(B, r) for r in src_rel]
        kq = quotient(matrix_from_columns(coeffs, B.cols))
        kgroup = kq.group

        coker = presented_group(
            [gens[index_of_cell[l]].order for l in lo], [col for col in Fk]
        ).group
        if kgroup.torsion and not coker.is_trivial():
            raise AmbiguousExtension(
                f"pi_{k}: extension of {kgroup} by {coker} is not determined by the sequence"
            )
        block = []
        for j in range(kgroup.ngens):
            v = B.apply(kq.section.column(j))
            vec = tuple((p.labels[u], x) for u, x in zip(up, v) if x)
            name = " + ".join(f"{x}*{lab}" if x != 1 else lab for lab, x in vec) or "0"
            block.append(Generator("lift", f"lift({name})", kgroup.orders[j], vec))
        lift_blocks.append(block)

        # exactness audit for this piece
        tgt_q = presented_group(tgt_orders)
        boundary_ok = all(
            tgt_q.project(F.apply([dict(g.vector).get(p.labels[u], 0) for u in up])).is_zero()
            for g in block
        )
        audits.append((t, Fk, lo, boundary_ok, coker, kgroup, block))

    for block in lift_blocks:
        for g in block:
            gens.append(g)
    n = len(gens)
    relations = [r + [0] * (n - len(r)) for r in extra_relations]
    total = presented_group([g.order for g in gens], relations)
    labels = [_name(total.section.column(c), gens) for c in range(total.group.ngens)]
    total = Quotient(total.group.with_generators(labels), total.projection, total.section)

    piece_audits = []
    for t, Fk, lo, boundary_ok, coker, kgroup, block in audits:
        dies = all(total.project(_embed(col, lo, index_of_cell, n)).is_zero() for col in Fk)
        # the piece on its own: lower cells plus its lifts, modulo the image of f_k
        orders = [gens[index_of_cell[l]].order for l in lo] + [g.order for g in block]
        m = len(orders)
        piece = presented_group(orders, [col + [0] * (m - len(col)) for col in Fk]).group
        balance = piece.rank == coker.rank + kgroup.rank and _torsion_size(piece) == (
            _torsion_size(coker) * _torsion_size(kgroup)
        )
        piece_audits.append(PieceAudit(t, dies, boundary_ok, balance))
    return HomotopyGroup(p, k, equivariant, tuple(gens), total, tuple(piece_audits))


def _embed(col, lo, index_of_cell, n):
    v = [0] * n
    for c, l in enumerate(lo):
        v[index_of_cell[l]] = col[c]
    return v


def _torsion_size(g: FGAbelianGroup) -> int:
    size = 1
    for d in g.torsion:
        size *= d
    return size


def _name(vec, gens) -> str:
    terms = []
    for g, x in zip(gens, vec):
        if g.order:
            x %= g.order
        if x:
            terms.append(g.label if x == 1 else f"{x}*{g.label}")
    return " + ".join(terms) or "0"


def forgetful_on_classes(hg: HomotopyGroup, x: GroupElement) -> tuple[HomotopyGroup, GroupElement]:
    """Image of an equivariant class in the nonequivariant group of the same presentation."""
    if not hg.equivariant:
        return hg, x
    p = hg.presentation
    fr = forget_with_steps(p)
    comps: dict[str, int] = {}
    for lab, v in hg.cell_components(x).items():
        comps.update(split_components(p.cells[p.label_index(lab)], lab, v))
    moved = fr.transport(comps, hg.degree)
    target = homotopy_group(fr.presentation, hg.degree, equivariant=False)
    return target, target.from_cell_components(moved)


def les_audit(p: SpectrumPresentation, k: int, equivariant: bool = True) -> tuple[PieceAudit, ...]:
    """Exactness checks of every cofibration used for ``pi_k``."""
    return homotopy_group(p, k, equivariant).audits
