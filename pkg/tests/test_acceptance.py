"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line.  Run directly with
``python tests/test_acceptance.py`` or through pytest.
"""
from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import product
from math import gcd

import pytest

from swfspectra.applications import (
    NucleusParams,
    Verdict,
    adjunction_negative_check,
    adjunction_positive_check,
    exotic_nuclei_check,
    relative_sw_series,
)
from swfspectra.catalog import (
    BrieskornParams,
    LensParams,
    brieskorn_morse_data,
    swf_brieskorn,
    swf_lens,
    swf_poincare,
    swf_sphere,
)
from swfspectra.cells import Cell, dual_cell, morphism_group
from swfspectra.errors import SWFError
from swfspectra.forget import forget
from swfspectra.gluing import RelativeInvariantClass, duality_pairing
from swfspectra.homotopy import forgetful_on_classes, homotopy_group, les_audit
from swfspectra.spectrum import build_from_morse, describe, dualize, from_json, suspend, to_json, wedge
from swfspectra.zlinalg import FGAbelianGroup, IntegerMatrix, direct_sum, smith_normal_form

try:
    from conftest import catalog_spectra
except ImportError:  # run as a script from elsewhere
    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    from conftest import catalog_spectra

def _report(number: int, title: str, check, budget: float) -> None:
    start = time.perf_counter()
    try:
        detail = check()
        elapsed = time.perf_counter() - start
        assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget:.0f}s"
    except Exception as exc:
        elapsed = time.perf_counter() - start
        print(f"FAIL  criterion {number}: {title} ({elapsed:.2f}s) -- {type(exc).__name__}: {exc}")
        raise
    suffix = f"; {detail}" if detail else ""
    print(f"PASS  criterion {number}: {title} ({elapsed:.2f}s{suffix})")


def _criterion_1():
    assert swf_sphere().cells == (Cell.sphere(0),)
    assert swf_poincare().cells == (Cell.sphere(0, 1),)
    count = 0
    for n in range(1, 13):
        for k in range(n):
            n_k = Fraction((n - 2 * k) ** 2 - n, 8 * n)
            p = swf_lens(LensParams(n, k))
            assert p.cells == (Cell.sphere(0, -n_k),) and p.is_wedge(), (n, k)
            count += 1
    return f"{count} lens spin^c structures"


def _criterion_2():
    def via_morse(r):
        p = swf_brieskorn(BrieskornParams(r, "neg"))
        assert p == build_from_morse(brieskorn_morse_data(r))
        return p

    eleven, seven = via_morse(11), via_morse(7)
    thirteen, seventeen = via_morse(13), via_morse(17)
    assert describe(forget(eleven)) == "S^-2 v S^-2 v S^-1"
    assert seven == suspend(eleven, 0, 1)
    assert describe(thirteen) == "S^0 v T+[0] v T+[0]"
    assert seventeen == suspend(thirteen, 0, -1)
    return None


def _criterion_3():
    y = swf_brieskorn(BrieskornParams(11, "neg"))
    g = homotopy_group(y, -1, equivariant=True)
    assert g.group == FGAbelianGroup(1) and g.group.generators == ("a1",)
    target, image = forgetful_on_classes(g, g.element([1]))
    assert target.group == FGAbelianGroup(1, (2, 2))
    assert target.group.generators == ("a1.bot", "a2.bot", "a1.top")
    assert image.coords == (0, 0, 1)
    h = homotopy_group(dualize(y), 4, equivariant=False)
    assert h.group == FGAbelianGroup(0, (2, 2, 24))
    assert h.group.generators == ("a1.top", "a2.top", "a1.bot")
    return None


def _criterion_4():
    y = swf_brieskorn(BrieskornParams(11, "neg"))
    minus_y = dualize(y)
    cases = 0
    for a1, b1, c1 in product(range(2), range(2), range(2)):
        x = RelativeInvariantClass.create(y, -1, [a1, b1, c1])
        for a2, b2, c2 in product(range(2), range(2), range(24)):
            z = RelativeInvariantClass.create(minus_y, 4, [a2, b2, c2])
            value = duality_pairing(x, z)
            assert value.stem == 3
            assert value.value == (12 * (a1 * a2 + b1 * b2) + c1 * c2) % 24, (a1, b1, c1, a2, b2, c2)
            cases += 1
    assert cases == 768
    return f"{cases} cases"


def _criterion_5():
    start = time.perf_counter()
    pairs = [(p, q) for p in range(1, 21) for q in range(1, 21) if gcd(p, q) == 1]
    for p, q in pairs:
        params = NucleusParams(p, q)
        s = relative_sw_series(params)
        assert s.is_symmetric() and s.evaluate_at_one() == p * q
        assert s[2 * p * q - p - q] == 1
        expected = Verdict.NO_OBSTRUCTION if (p, q) == (1, 1) else Verdict.CONTRADICTION
        assert exotic_nuclei_check(params).verdict is expected, (p, q)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"sweep took {elapsed:.2f}s"
    return f"{len(pairs)} coprime pairs"


def _criterion_6():
    checked = 0
    for n in range(1, 21):
        for c in range(-3 * n, 3 * n + 1):
            if (c - n) % 2:
                continue
            allowed = adjunction_negative_check(n, c, True).verdict is Verdict.ALLOWED
            assert allowed == (abs(c) <= n), (n, c)
            checked += 1
    for square in range(1, 101):
        assert adjunction_positive_check(True, square).verdict is Verdict.NO_BASIC_CLASSES
    return f"{checked} negative cases, 100 positive squares"


def _criterion_7():
    rng = random.Random(20240611)
    for _ in range(1000):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        A = IntegerMatrix.from_rows([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        U, D, V = smith_normal_form(A)
        assert U @ A @ V == D

    spectra = catalog_spectra()
    for p in spectra.values():
        assert dualize(dualize(p)) == p
        for cell in p.cells:
            assert dual_cell(dual_cell(cell)) == cell

    wedge_checks = 0
    for degrees in product(range(-2, 3), repeat=2):
        cells = [Cell.free(degrees[0]), Cell.sphere(degrees[1])]
        for k in range(-3, 6):
            try:
                expected = direct_sum(*(morphism_group(Cell.sphere(k), x) for x in cells)).group
            except SWFError:
                continue
            assert homotopy_group(wedge(cells), k).group == expected
            wedge_checks += 1

    audits = 0
    for name, p in spectra.items():
        for k in range(-3, 6):
            for eq in (True, False):
                try:
                    result = les_audit(p, k, eq)
                except SWFError:
                    continue
                assert all(a.ok for a in result), (name, k, eq)
                audits += 1
    return f"1000 SNF, {wedge_checks} wedge groups, {audits} LES audits"


def _criterion_8():
    spectra = catalog_spectra()
    for name, p in spectra.items():
        text = to_json(p)
        back = from_json(text)
        assert back == p and to_json(back) == text, name
    return f"{len(spectra)} presentations"


# (number, title, check, time budget in seconds)
CRITERIA = [
    (1, "catalog golden values", _criterion_1, 1.0),
    (2, "Brieskorn j=1 row via Morse data", _criterion_2, 1.0),
    (3, "group computations with generator bookkeeping", _criterion_3, 1.0),
    (4, "mod-24 pairing, exhaustive", _criterion_4, 1.0),
    (5, "exotic nuclei sweep", _criterion_5, 5.0),
    (6, "adjunction sweeps", _criterion_6, 1.0),
    (7, "property suites", _criterion_7, 1.0),
    (8, "JSON round trip", _criterion_8, 1.0),
]


@pytest.mark.parametrize("number, title, check, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, budget, capsys):
    with capsys.disabled():
        _report(number, title, check, budget)


if __name__ == "__main__":
    failed = 0
    for number, title, check, budget in CRITERIA:
        try:
            _report(number, title, check, budget)
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
