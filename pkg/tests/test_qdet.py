from collections import Counter

from qhact.cyclotomic import zeta
from qhact.classify import all_matrix_families, m2_family
from qhact.ncalg import commutator, from_word, multiply, quantum_matrix
from qhact.qdet import (
    centrality_check,
    ideal_stability,
    inversions,
    laplace_check,
    quantum_determinant,
    quantum_minor,
)


def test_inversions():
    assert inversions((0, 1, 2)) == 0
    assert inversions((2, 1, 0)) == 3
    assert inversions((1, 0, 2)) == 1


def test_det_small():
    q = zeta(5)
    m1 = quantum_matrix(1, q)
    assert list(quantum_determinant(m1).terms) == [(0,)]
    m2 = quantum_matrix(2, q)
    det = quantum_determinant(m2)
    assert det.terms[(0, 3)] == 1
    assert det.terms[(1, 2)] == -q
    assert len(det.terms) == 2


def test_det3_coefficients():
    q = zeta(5)
    m3 = quantum_matrix(3, q)
    det = quantum_determinant(m3)
    assert len(det.terms) == 6
    coeffs = Counter()
    for c in det.terms.values():
        for e in range(6):
            if c == (-q) ** e:
                coeffs[e] += 1
                break
    # inversion counts over S_3: 0,1,1,2,2,3
    assert coeffs == Counter({0: 1, 1: 2, 2: 2, 3: 1})


def test_centrality_and_control():
    for order in (3, 5, 8):
        q = zeta(order)
        assert centrality_check(quantum_matrix(2, q))
    q = zeta(5)
    m2 = quantum_matrix(2, q)
    assert centrality_check(quantum_matrix(3, q))
    # control: AD is not central (fails against A)
    A, D = from_word(m2, (0,)), from_word(m2, (3,))
    AD = multiply(m2, A, D)
    assert not commutator(m2, AD, A).is_zero()


def test_laplace():
    q = zeta(5)
    m2 = quantum_matrix(2, q)
    assert laplace_check(m2, 0)
    m3 = quantum_matrix(3, q)
    for col in range(3):
        assert laplace_check(m3, col)
    assert not laplace_check(m3, 1, flip_sign=True)
    m3b = quantum_matrix(3, zeta(7))
    assert laplace_check(m3b, 2)


def test_minor_is_sub_determinant():
    q = zeta(5)
    m3 = quantum_matrix(3, q)
    minor = quantum_minor(m3, [0, 1], [0, 1])
    # Y11 Y22 - q Y12 Y21 in flat indices
    assert minor.terms[(0, 4)] == 1
    assert minor.terms[(1, 3)] == -q


def test_ideal_stability_rows():
    q = zeta(5)
    for row in range(1, 9):
        flags = ideal_stability(m2_family(q, row).instance())
        assert (flags == (True, True)) == (row in {1, 2, 4, 5})
    for pa in all_matrix_families(3, q):
        kind = int(pa.tag[1])
        flags = ideal_stability(pa.instance())
        assert (flags == (True, True)) == (kind in {1, 2, 5, 6}), pa.tag


def test_qdet_input_errors():
    import pytest

    from qhact.cyclotomic import InputError
    from qhact.ncalg import quantum_plane

    with pytest.raises(InputError):
        quantum_determinant(quantum_plane(zeta(5)))
    m2 = quantum_matrix(2, zeta(5))
    with pytest.raises(InputError):
        laplace_check(m2, 2)
