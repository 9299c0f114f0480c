import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ugig.graph import build_bipartite

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

EPS = Fraction(1, 2)


@pytest.fixture
def rng():
    return random.Random(20261014)


@st.composite
def bipartite_graphs(draw, max_side=4, min_side=1):
    nh = draw(st.integers(min_side, max_side))
    nv = draw(st.integers(min_side, max_side))
    hs = [f"h{i}" for i in range(nh)]
    vs = [f"v{j}" for j in range(nv)]
    pairs = [(h, v) for h in hs for v in vs]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_bipartite(hs, vs, [p for p, k in zip(pairs, keep) if k])


def random_rays(n, rng, directions="LRUD", grid=None):
    """Random ray layout on integer origins; labels r0.. ."""
    from ugig.geometry import OrthoRay, RayRepresentation

    # distinct coordinates keep collinear rays apart
    grid = max(grid or 2 * n, n)
    xs = rng.sample(range(grid), n)
    ys = rng.sample(range(grid), n)
    rays = {}
    for i in range(n):
        rays[f"r{i}"] = OrthoRay(rng.choice(directions), Fraction(xs[i]), Fraction(ys[i]))
    return RayRepresentation(rays)


def random_unit_rep(n, rng):
    """Random UGIG representation via a random proper certificate."""
    from ugig.certificate import random_certificate, realize_unit

    nh = rng.randint(0, n)
    return realize_unit(random_certificate(nh, n - nh, rng))


# -- acceptance reporting: one line per criterion in the terminal summary --------

ACCEPTANCE = {}


@pytest.fixture
def criterion():
    def record(number, ok, detail=""):
        ACCEPTANCE[number] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
