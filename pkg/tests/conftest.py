import math

from hypothesis import settings
from hypothesis import strategies as st

from genquat import AlgebraParams, GQuat

settings.register_profile("thorough", max_examples=3000)

GRID = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)

# e_i e_j = c e_k transcribed independently of the library; alpha and beta
# enter as powers (p_alpha, p_beta) of the coefficient
_TABLE = {
    (1, 1): (1, 0, 0, 1), (1, 2): (1, 0, 0, 2), (1, 3): (1, 0, 0, 3), (1, 4): (1, 0, 0, 4),
    (2, 1): (1, 0, 0, 2), (2, 2): (-1, 1, 0, 1), (2, 3): (1, 0, 0, 4), (2, 4): (-1, 1, 0, 3),
    (3, 1): (1, 0, 0, 3), (3, 2): (-1, 0, 0, 4), (3, 3): (-1, 0, 1, 1), (3, 4): (1, 0, 1, 2),
    (4, 1): (1, 0, 0, 4), (4, 2): (1, 1, 0, 3), (4, 3): (-1, 0, 1, 2), (4, 4): (-1, 1, 1, 1),
}


def basis_product(params, i, j):
    sign, pa, pb, k = _TABLE[i, j]
    return sign * params.alpha ** pa * params.beta ** pb, k


def brute_mul(x, y):
    """Product by expanding over all 16 basis pairs."""
    out = [0.0] * 4
    for i in range(1, 5):
        for j in range(1, 5):
            c, k = basis_product(x.params, i, j)
            out[k - 1] += x.coeffs[i - 1] * y.coeffs[j - 1] * c
    return out


def max_abs(a, b):
    return max(abs(u - v) for u, v in zip(a, b))


def magnitude(*qs):
    return max(max(abs(c) for c in q) for q in qs)


coeff = st.floats(-2.0, 2.0, allow_nan=False)
params_st = st.builds(AlgebraParams, st.sampled_from(GRID), st.sampled_from(GRID))


@st.composite
def gquats(draw, params=None, elements=coeff):
    p = draw(params_st) if params is None else params
    return GQuat(draw(elements), draw(elements), draw(elements), draw(elements), p)


@st.composite
def gquat_tuples(draw, n, elements=coeff):
    p = draw(params_st)
    return tuple(draw(gquats(params=p, elements=elements)) for _ in range(n))


def isclose_all(a, b, rel=0.0, abs_=0.0):
    return all(math.isclose(u, v, rel_tol=rel, abs_tol=abs_) for u, v in zip(a, b))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
