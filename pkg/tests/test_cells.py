from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from swfspectra.cells import (
    Cell,
    D2Verdict,
    d2_admissible,
    dual_cell,
    forget_cell,
    morphism_group,
    trivial_mapping_group_is_torsion,
    wedge_morphism_group,
)
from swfspectra.errors import NonIntegralDimension, UnsupportedMorphismGroup
from swfspectra.stems import stable_stem
from swfspectra.zlinalg import FGAbelianGroup, direct_sum

fractions = st.fractions(max_denominator=24).filter(lambda f: abs(f) < 10)
cells = st.one_of(
    st.integers(-6, 6).map(Cell.free),
    st.builds(Cell.sphere, st.integers(-6, 6), fractions),
)


def test_examples():
    assert morphism_group(Cell.free(-2), Cell.free(-1)).is_trivial()
    assert morphism_group(Cell.sphere(-1), Cell.free(-2)) == FGAbelianGroup(1)
    assert morphism_group(Cell.free(0), Cell.sphere(2)).is_trivial()


def test_unequal_complex_parts():
    with pytest.raises(UnsupportedMorphismGroup):
        morphism_group(Cell.sphere(0, 1), Cell.sphere(0))
    # nonequivariantly these are ordinary spheres
    assert morphism_group(Cell.sphere(0, 1), Cell.sphere(0), equivariant=False) == stable_stem(2)


def test_free_source_is_a_stem():
    for a in range(-5, 6):
        for b in range(-5, 6):
            for dst in (Cell.free(b), Cell.sphere(b)):
                if a - b <= 3:
                    assert morphism_group(Cell.free(a), dst) == stable_stem(a - b)


def test_dual_cell():
    assert dual_cell(Cell.free(-2)) == Cell.free(1)
    assert dual_cell(Cell.sphere(0)) == Cell.sphere(0)
    assert dual_cell(Cell.sphere(1, Fraction(1, 8))) == Cell.sphere(-1, Fraction(-1, 8))


@given(cells)
def test_dual_involution(c):
    assert dual_cell(dual_cell(c)) == c


@given(st.integers(-6, 6))
def test_forget_of_dual_free_cell(m):
    c = Cell.free(m)
    assert forget_cell(dual_cell(c)) == [-d for d in reversed(forget_cell(c))]


def test_forget_cell():
    assert forget_cell(Cell.free(-2)) == [-2, -1]
    assert forget_cell(Cell.sphere(1, 1)) == [3]
    with pytest.raises(NonIntegralDimension):
        forget_cell(Cell.sphere(0, Fraction(1, 8)))


def test_free_cells_shift_integrally():
    assert Cell.free(0).shifted(0, 1) == Cell.free(2)
    with pytest.raises(NonIntegralDimension):
        Cell.free(0).shifted(0, Fraction(1, 4))


def test_pretty():
    assert str(Cell.free(-2)) == "T+[-2]"
    assert str(Cell.sphere(-2)) == "S^-2"
    assert str(Cell.sphere(0, Fraction(1, 12))) == "S^{0 + 1/12C}"
    assert str(Cell.sphere(1, -1)) == "S^{1 - 1C}"


@given(st.lists(cells.filter(lambda c: c.total_dim.denominator == 1), min_size=1, max_size=4), st.integers(-3, 3))
def test_nonequivariant_wedge_is_direct_sum(srcs, k):
    dst = Cell.sphere(k)
    if any(d - k > 3 for s in srcs for d in forget_cell(s)):
        return
    expected = direct_sum(*(stable_stem(d - k) for s in srcs for d in forget_cell(s))).group
    assert wedge_morphism_group(srcs, dst, equivariant=False) == expected


def test_d2():
    assert d2_admissible(0, 0, 1) is D2Verdict.NO_MAP
    assert d2_admissible(1, 2, 0) is D2Verdict.IDENTITY_CLASS
    assert d2_admissible(0, 3, -2) is D2Verdict.UNIQUE_INCLUSION_CLASS


def test_torsion_rule():
    for d in (0, 3, Fraction(-1, 8)):
        assert trivial_mapping_group_is_torsion(d) is True
