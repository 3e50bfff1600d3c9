import pytest
from hypothesis import given, settings, strategies as st

from swfspectra.catalog import BrieskornParams, swf_brieskorn, swf_sphere
from swfspectra.cells import Cell, morphism_group
from swfspectra.errors import (
    AmbiguousExtension,
    NonIntegralDimension,
    UnsupportedMorphismGroup,
    UnsupportedStem,
)
from swfspectra.homotopy import forgetful_on_classes, homotopy_group, les_audit
from swfspectra.spectrum import single_cell, suspend, wedge
from swfspectra.zlinalg import FGAbelianGroup, direct_sum

SKIP = (UnsupportedStem, UnsupportedMorphismGroup, NonIntegralDimension, AmbiguousExtension)


@pytest.fixture(scope="module")
def y():
    return swf_brieskorn(BrieskornParams(11, "neg"))


@pytest.fixture(scope="module")
def minus_y():
    return swf_brieskorn(BrieskornParams(11, "pos"))


def test_sphere():
    assert homotopy_group(swf_sphere(), 0).group == FGAbelianGroup(1)
    assert homotopy_group(swf_sphere(), 3, equivariant=False).group == FGAbelianGroup(0, (24,))


def test_equivariant_group_of_y(y):
    hg = homotopy_group(y, -1, equivariant=True)
    assert hg.group == FGAbelianGroup(1)
    assert all(a.ok for a in hg.audits)


def test_forgetful_image(y):
    hg = homotopy_group(y, -1, equivariant=True)
    target, image = forgetful_on_classes(hg, hg.element([1]))
    assert target.group == FGAbelianGroup(1, (2, 2))
    assert image.coords == (0, 0, 1)
    _, zero = forgetful_on_classes(hg, hg.group.zero())
    assert zero.is_zero()


def test_forgetful_single_free_cell():
    hg = homotopy_group(single_cell(Cell.free(-2)), -1, equivariant=True)
    assert hg.group == FGAbelianGroup(1)
    target, image = forgetful_on_classes(hg, hg.element([1]))
    assert target.group == FGAbelianGroup(1, (2,))
    assert image.coords == (0, 1)


def test_pi4_of_minus_y(minus_y):
    hg = homotopy_group(minus_y, 4, equivariant=False)
    assert hg.group == FGAbelianGroup(0, (2, 2, 24))
    assert hg.group.generators == ("a1.top", "a2.top", "a1.bot")


def test_pi_minus1_of_y_nonequivariant(y):
    hg = homotopy_group(y, -1, equivariant=False)
    assert str(hg.group) == "Z/2 + Z/2 + Z"
    assert hg.group.generators == ("a1.bot", "a2.bot", "a1.top")


def _cell_sum(cells, k, equivariant):
    return direct_sum(*(morphism_group(Cell.sphere(k), c, equivariant) for c in cells)).group


cell_lists = st.lists(
    st.one_of(st.integers(-4, 4).map(Cell.free), st.integers(-4, 4).map(Cell.sphere)), min_size=1, max_size=4
)


@settings(max_examples=60, deadline=None)
@given(cell_lists, st.integers(-3, 5), st.booleans())
def test_wedge_is_direct_sum(cells, k, equivariant):
    p = wedge(cells)
    try:
        expected = _cell_sum(cells, k, True) if equivariant else direct_sum(
            *(morphism_group(Cell.sphere(k), Cell.sphere(d), False) for c in cells
              for d in ([c.real, c.real + 1] if c.is_free else [c.real]))
        ).group
    except UnsupportedStem:
        with pytest.raises(UnsupportedStem):
            homotopy_group(p, k, equivariant)
        return
    assert homotopy_group(p, k, equivariant).group == expected


def test_complex_suspension_shifts_degree(catalog):
    for name, p in catalog.items():
        for k in range(-3, 2):
            try:
                g = homotopy_group(p, k, equivariant=False).group
            except SKIP:
                continue
            assert homotopy_group(suspend(p, 0, 1), k + 2, equivariant=False).group == g, (name, k)


def test_les_audits(catalog):
    checked = 0
    for name, p in catalog.items():
        for k in range(-3, 6):
            for eq in (True, False):
                try:
                    audits = les_audit(p, k, eq)
                except SKIP:
                    continue
                assert all(a.ok for a in audits), (name, k, eq)
                checked += 1
    assert checked > 100


def test_out_of_range(y):
    with pytest.raises(UnsupportedStem):
        homotopy_group(y, 6, equivariant=False)
