import pytest

from rigid_jets.rigidity.genconn import genconn_rigidity_check, verify_generalized_connection, verify_gl_stabilizer

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("n,dimension", [(2, 4), (3, 20)])
def test_generalized_connection(n, dimension):
    report = verify_generalized_connection(n)
    assert report.passed, report.notes
    assert report.kernel_dimension == dimension


def test_solutions_truncate_to_the_identity_at_order_two():
    kernel = genconn_rigidity_check(3)
    assert kernel.forced_triviality_order == 2
    assert all(s.lowest_nontrivial_order() == 3 for s in kernel.basis)


def test_gl_stabilizer_in_four_dimensions():
    report = verify_gl_stabilizer(4)
    assert report.passed, report.notes
