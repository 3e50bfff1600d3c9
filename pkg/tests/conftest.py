import pytest

from swfspectra.catalog import BrieskornParams, LensParams, swf_brieskorn, swf_lens, swf_poincare, swf_sphere


def catalog_spectra():
    out = {"S3": swf_sphere(), "Sigma(2,3,5)": swf_poincare()}
    for n in range(1, 7):
        for k in range(n):
            out[f"L({n},1),c{k}"] = swf_lens(LensParams(n, k))
    for r in (5, 7, 11, 13, 17, 19, 23, 25, 29, 31):
        for o in ("pos", "neg"):
            out[f"{o}Sigma(2,3,{r})"] = swf_brieskorn(BrieskornParams(r, o))
    return out


@pytest.fixture(scope="session")
def catalog():
    return catalog_spectra()
