from fractions import Fraction as F

from syang.exactmath import SparseMatrix
from syang.superalgebra import GradingContext
from syang.verify import (
    candidate_alphas,
    coassociativity_failures,
    counit_failures,
    module_radical,
    operator_algebra,
    suite_oracle,
)

C11 = GradingContext(1, 1)


def test_operator_algebra_dimensions():
    J = SparseMatrix.from_dense([[0, 1], [0, 0]])
    assert len(operator_algebra([J], 2)) == 2  # span{I, J}
    units = [SparseMatrix.unit(2, i, j) for i in range(2) for j in range(2)]
    assert len(operator_algebra(units, 2)) == 4


def test_radical_examples():
    J = SparseMatrix.from_dense([[0, 1], [0, 0]])
    assert module_radical([J], 2) == [(F(1), F(0))]
    units = [SparseMatrix.unit(2, i, j) for i in range(2) for j in range(2)]
    assert module_radical(units, 2) == []
    D = SparseMatrix.from_dense([[1, 0], [0, 2]])
    assert module_radical([D], 2) == []


def test_candidate_alphas():
    al = candidate_alphas(2)
    assert F(-2) in al and F(1, 2) in al and len(al) == len(set(al))


def test_hopf_helpers_small():
    assert coassociativity_failures(C11, 2, (0, F(1, 2), F(-1, 3))) == []
    assert counit_failures(C11, 2) == []


def test_oracle_suite():
    rep = suite_oracle(C11, seed=1, generic_samples=4)
    assert rep.passed, rep.to_json()
    assert suite_oracle(GradingContext(2, 1)).passed
