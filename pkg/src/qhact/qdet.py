"""Quantum determinant: permutation-sum definition, Laplace expansion along
any column, centrality, and stability of the determinant ideals under a
verified action (the descent conditions g.det = det and x.det = 0)."""

from __future__ import annotations

from itertools import permutations

from .cyclotomic import InputError
from .hopf import ActionInstance, act_grouplike, act_skew
from .ncalg import MATRIX, NCPoly, Presentation, commutator, from_word, multiply, normalize, p_sub


def inversions(pi):
    """Length (inversion count) of a permutation given as an image tuple."""
    count = 0
    for i in range(len(pi)):
        for j in range(i + 1, len(pi)):
            if pi[i] > pi[j]:
                count += 1
    return count


def quantum_determinant(pres: Presentation) -> NCPoly:
    """sum over permutations of (-q)^len . Y_{1,pi(1)} ... Y_{N,pi(N)}."""
    if pres.family != MATRIX:
        raise InputError("quantum determinant lives on a quantum matrix algebra")
    return quantum_minor(pres, list(range(pres.N)), list(range(pres.N)))


def quantum_minor(pres: Presentation, rows, cols) -> NCPoly:
    """Quantum determinant of the subalgebra on the given rows and columns
    (0-based, strictly increasing), with lengths counted in the induced order."""
    N = pres.N
    if len(rows) != len(cols):
        raise InputError("minor needs equally many rows and columns")
    k = len(rows)
    mq = -pres.q
    terms = {}
    for pi in permutations(range(k)):
        word = tuple(rows[i] * N + cols[pi[i]] for i in range(k))
        terms[word] = mq ** inversions(pi)
    return normalize(pres, terms)


def centrality_check(pres: Presentation) -> bool:
    """det_q commutes with every generator."""
    det = quantum_determinant(pres)
    for k in range(pres.ngens):
        if not commutator(pres, det, from_word(pres, (k,))).is_zero():
            return False
    return True


def laplace_check(pres: Presentation, col, flip_sign=False) -> bool:
    """Expansion along the given column (0-based) reproduces det_q:
    det = sum_k (-q)^(col - k) A_{k,col} Y_{k,col}."""
    N = pres.N
    if not 0 <= col < N:
        raise InputError("column out of range")
    det = quantum_determinant(pres)
    mq = -pres.q
    acc = NCPoly()
    cols = [j for j in range(N) if j != col]
    for k in range(N):
        rows = [i for i in range(N) if i != k]
        minor = quantum_minor(pres, rows, cols)
        sign = mq ** ((k - col) if flip_sign else (col - k))
        term = multiply(pres, minor, from_word(pres, (k * N + col,), sign))
        acc = p_sub(acc, p_sub(NCPoly(), term))
    return p_sub(acc, det).is_zero()


def ideal_stability(inst: ActionInstance):
    """Flags (g_fixes_det, x_kills_det): whether every grouplike fixes det_q
    and every skew primitive kills it.  Both together make the ideals
    (det_q - 1) and (det_q) stable, so the action descends and lifts."""
    pres = inst.pres
    det = quantum_determinant(pres)
    g_fixes = all(
        p_sub(act_grouplike(pres, g, det), det).is_zero() for g in inst.gen_actions
    )
    x_kills = all(
        act_skew(pres, inst, i, det).is_zero() for i in range(inst.qls.theta)
    )
    return g_fixes, x_kills
