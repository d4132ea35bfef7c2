import pytest

from nilmoduli import NilPolynomial, make_context


def shift_matrix(field, n, power=1):
    """Nilpotent shift J (ones on the subdiagonal) raised to a power."""
    m = [[field.zero] * n for _ in range(n)]
    for i in range(n - power):
        m[i + power][i] = field.one
    return m


def x(ctx, i):
    return NilPolynomial.variable(ctx, i)


@pytest.fixture
def ctx23():
    return make_context(2, 3)


@pytest.fixture
def ctx24():
    return make_context(2, 4)


@pytest.fixture
def ctx34():
    return make_context(3, 4)
