"""Construction and extension tests pinned to worked reference codes.

The anchor data are full generator/parity-check matrices of small codes over
GF(4), GF(9) and GF(81) whose parameters were independently verified, so any
drift in circulant orientation, conjugation or extension layout fails loudly.
GF(81) digits follow the usual convention: 0 is zero and digit e+1 is zeta^e.
"""

import pytest

from qcqec import famat, polyring, qcc
from qcqec.errors import BudgetExceeded, PreconditionError
from qcqec.gf import field_make

GF4 = field_make(2)
GF9 = field_make(3)
GF81 = field_make(9)

# GF(4): n=15, self-orthogonal by the divisibility test, one-column extension
G15 = (1, 2, 2, 0, 3, 1, 0, 1, 3, 1)
F15 = (1, 2, 2, 2)
X15 = (1, 3, 2) * 5

EXT15_ROWS = [
    [1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 0, 0, 0, 0, 0, 1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 3, 2, 0, 0, 0],
    [0, 1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 0, 0, 0, 0, 0, 1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 3, 2, 0, 0],
    [0, 0, 1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 0, 0, 0, 0, 0, 1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 3, 2, 0],
    [0, 0, 0, 1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 0, 0, 2, 0, 0, 1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 3, 0],
    [0, 0, 0, 0, 1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 0, 3, 2, 0, 0, 1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 0],
    [0, 0, 0, 0, 0, 1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 1, 3, 2, 0, 0, 1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 0],
    [1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

# GF(9): n=10, two-column extension
G10 = (5, 3, 1, 0, 5, 7, 1)
F10 = (1, 5, 2, 1)
X10A = (1, 1, 8, 2, 1, 2, 2, 6, 0, 1)
X10B = (1, 7, 3, 8, 5, 7, 7, 0, 3, 2)

EXT10_ROWS = [
    [5, 3, 1, 0, 5, 7, 1, 0, 0, 0, 5, 8, 2, 7, 6, 4, 5, 2, 5, 1, 0, 0],
    [0, 5, 3, 1, 0, 5, 7, 1, 0, 0, 1, 5, 8, 2, 7, 6, 4, 5, 2, 5, 0, 0],
    [0, 0, 5, 3, 1, 0, 5, 7, 1, 0, 5, 1, 5, 8, 2, 7, 6, 4, 5, 2, 0, 0],
    [0, 0, 0, 5, 3, 1, 0, 5, 7, 1, 2, 5, 1, 5, 8, 2, 7, 6, 4, 5, 0, 0],
    [1, 1, 8, 2, 1, 2, 2, 6, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 7, 3, 8, 5, 7, 7, 0, 3, 2, 0, 1],
]

# GF(4): n=7 and n=11, entanglement certificate codes
G7 = (1, 1)
F7 = (0, 3, 2, 3, 2, 1)
G11 = (1, 2, 2, 0, 3, 3, 1)
F11 = (0, 1, 3, 2, 1)

# GF(81): n=10, certificate base plus rank-preserving two-column extension
G81 = (49, 45, 11, 37, 53, 59, 45, 1)
F81 = (1, 3, 15)
X81A = (45, 72, 57, 23, 53, 74, 34, 59, 59, 34)
X81B = (19, 42, 41, 11, 18, 32, 72, 62, 67, 76)


def build15():
    return qcc.build(GF4, 15, F15, G15)


def build10():
    return qcc.build(GF9, 10, F10, G10)


def build81():
    return qcc.build(GF81, 10, F81, G81)


def test_build_gf4_n15():
    code = build15()
    assert code.k == 6
    assert code.length == 30
    assert code.orthogonal_divisibility
    assert code.orthogonal_gram
    assert code.gram().is_zero()
    # left block is the circulant of g, right block the circulant of f*g
    assert code.G1.row(0) == G15 + (0,) * 5
    assert code.G2.row(0) == (1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 3, 2, 0, 0)
    assert code.G2.row(3) == polyring.cyclic_shift(code.G2.row(0), 3)


def test_extend_one_gf4_n15_matches_reference():
    ext = qcc.extend_one(build15(), X15)
    assert ext.rule == qcc.RULE_ORTHOGONAL
    assert ext.length == 31 and ext.dim == 7
    assert ext.G == famat.Mat(GF4, EXT15_ROWS)
    assert famat.gram_hermitian(ext.G).is_zero()
    assert ext.self_products == (1,)


def test_extend_two_gf9_n10_matches_reference():
    code = build10()
    assert code.orthogonal_divisibility and code.orthogonal_gram
    ext = qcc.extend_two(code, X10A, X10B)
    assert ext.rule == qcc.RULE_ORTHOGONAL
    assert ext.length == 22 and ext.dim == 6
    assert ext.G == famat.Mat(GF9, EXT10_ROWS)
    # <x,x> = 2 in the prime subfield for both extension vectors
    assert ext.self_products == (GF9.from_int(2),) * 2


def test_parity_check_gf4_n7():
    code = qcc.build(GF4, 7, F7, G7)
    assert code.dual_g == (1,) * 7
    assert code.H1 == famat.Mat(GF4, [[1] * 7])
    assert code.H2 == famat.circulant(GF4, (0, 0, 1, 3, 2, 3, 2), 7)
    assert code.H.nrows == 8 and code.H.ncols == 14
    assert code.f_coprime


def test_certificate_gf4_n7():
    cert = qcc.entanglement_certificate(qcc.build(GF4, 7, F7, G7))
    assert cert.h1_gram_nonsingular
    assert cert.one_not_eigenvalue
    assert cert.satisfied
    assert cert.p_matrix == famat.circulant(GF4, (0, 0, 2, 3, 2, 3, 0), 7)
    assert cert.char_poly_p == (0, 1, 0, 0, 1, 0, 0, 1)  # x^7 + x^4 + x


def test_parity_check_gf4_n11():
    code = qcc.build(GF4, 11, F11, G11)
    assert code.dual_g == (1, 2, 1, 1, 3, 1)
    assert code.H2.row(0) == (0,) * 7 + (1, 3, 2, 1)
    assert qcc.entanglement_certificate(code).satisfied


def test_build_gf81_n10():
    code = build81()
    assert code.k == 3
    assert code.dual_g == (1, 37, 13, 9)
    assert code.H1.row(0) == (1, 37, 13, 9) + (0,) * 6
    assert code.H2 == famat.circulant(GF81, (41, 0, 0, 0, 0, 0, 0, 0, 7, 59), 10)
    assert code.G.row(0) == (49, 45, 11, 37, 53, 59, 45, 1, 0, 0) + (49, 59, 19, 16, 37, 57, 25, 24, 66, 15)
    assert code.G.row(1)[10:] == (15, 49, 59, 19, 16, 37, 57, 25, 24, 66)
    assert not code.orthogonal_gram


def test_certificate_gf81_n10():
    cert = qcc.entanglement_certificate(build81())
    assert cert.satisfied
    assert cert.p_matrix == famat.circulant(GF81, (61, 20, 1, 29, 42, 0, 50, 13, 1, 12), 10)
    # zeta-power factorization: x (x+z^10)(x+z^30)(x+z^50)(x+z^70)(x+z^60)^2(x+z^20)^3
    want = (0, 1)
    for const in (11, 31, 51, 71, 61, 61, 21, 21, 21):
        want = polyring.poly_mul(GF81, want, (const, 1))
    assert cert.char_poly_p == want
    assert polyring.poly_eval(GF81, want, 1) != 0


def test_extend_two_gf81_rank_rule():
    code = build81()
    ext = qcc.extend_two(code, X81A, X81B)
    assert ext.rule == qcc.RULE_GRAM_RANK
    assert ext.self_products == (61, 51)
    assert ext.gram_rank == 5
    assert ext.length == 22 and ext.dim == 5
    assert ext.G.row(3) == X81A + (0,) * 10 + (1, 0)
    assert ext.G.row(4) == (0,) * 10 + X81B + (0, 1)


def test_double_shift_closure():
    for code in (build15(), build10(), build81()):
        for i in range(code.k):
            shifted = qcc.double_shift(code.G.row(i))
            assert famat.row_space_contains(code.G, shifted)


def test_block_code_generators():
    code = build15()
    assert qcc.block_code_generator(code, 1) == G15
    # f coprime to x^n - 1 leaves the right block code equal to <g>
    assert code.f_coprime
    assert qcc.block_code_generator(code, 2) == G15
    assert famat.rank(code.G2) == code.k

    zero_f = qcc.build(GF4, 15, (0,), G15)
    assert zero_f.G2.is_zero()
    assert not zero_f.f_coprime
    assert qcc.block_dual_basis(zero_f, 2) == famat.Mat.identity(GF4, 15)


def test_g_must_divide():
    with pytest.raises(PreconditionError) as e:
        qcc.build(GF4, 15, F15, (0, 1))
    assert e.value.code == "g-not-divisor"


def test_extension_vector_not_in_dual():
    code = build15()
    bad = (1,) + (0,) * 14
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, bad)
    assert e.value.code == "not-in-dual"


def test_extension_wrong_field_size():
    # over GF(4) only the unit-alpha rule exists; g itself lies in the dual
    # but has even weight, so <g,g> = 0 != 1
    code = build15()
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, G15 + (0,) * 5)
    assert e.value.code == "wrong-field-size"
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, X15, alpha1=2)
    assert e.value.code == "wrong-field-size"


def test_extension_wrong_self_product():
    code = build10()
    scaled = tuple(GF9.mul(2, d) for d in X10A)  # norm(2) <x,x> = 2*2 = 1
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, scaled, alpha1=2)
    assert e.value.code == "wrong-self-product"


def test_extension_rank_rule_needs_full_gram():
    # a self-orthogonal base has zero Gram, so the rank rule cannot apply
    code = build10()
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, X10A, alpha1=2)
    assert e.value.code == "base-gram-rank-deficient"


def test_extension_base_not_self_orthogonal():
    code = build81()
    scaled = tuple(GF81.mul(7, d) for d in X81A)  # rescaled to <x,x> = 2
    assert qcc.hermitian_self_product(GF81, scaled) == GF81.from_int(2)
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, scaled)
    assert e.value.code == "base-not-self-orthogonal"


def test_extension_alpha_zero_and_length():
    code = build15()
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, X15, alpha1=0)
    assert e.value.code == "alpha-zero"
    with pytest.raises(PreconditionError) as e:
        qcc.extend_one(code, X15[:-1])
    assert e.value.code == "bad-extension-length"


def test_find_extension_vector_gf4():
    code = build15()
    v = qcc.find_extension_vector(code, 1)
    assert v == qcc.find_extension_vector(code, 1)
    assert famat.Mat(GF4, [list(v)]).mul(code.G1.dagger()).is_zero()
    assert qcc.hermitian_self_product(GF4, v) == 1
    assert famat.row_space_contains(qcc.block_dual_basis(code, 1), v)
    # the reference extension vector qualifies too
    assert famat.Mat(GF4, [list(X15)]).mul(code.G1.dagger()).is_zero()
    assert qcc.hermitian_self_product(GF4, X15) == 1


def test_find_extension_vector_extends_cleanly():
    code = build10()
    v1 = qcc.find_extension_vector(code, 1)
    v2 = qcc.find_extension_vector(code, 2)
    ext = qcc.extend_two(code, v1, v2)
    assert ext.rule == qcc.RULE_ORTHOGONAL
    assert famat.gram_hermitian(ext.G).is_zero()


def test_find_extension_vector_budget():
    code = build15()
    with pytest.raises(BudgetExceeded) as e:
        qcc.find_extension_vector(code, 1, scan_cap=4 ** 4)
    assert e.value.required == 4 ** 9
    # GF(81) duals above four dimensions are over the default cap
    with pytest.raises(BudgetExceeded):
        qcc.find_extension_vector(build81(), 1)


def test_find_extension_vector_rank_rule():
    code = build81()
    v = qcc.find_extension_vector(code, 1, alpha=1, scan_cap=81 ** 7)
    assert famat.Mat(GF81, [list(v)]).mul(code.G1.dagger()).is_zero()
    assert qcc.hermitian_self_product(GF81, v) != GF81.from_int(2)


def test_certificate_needs_coprime_f():
    code = qcc.build(GF4, 15, (1, 1), G15)
    assert not code.f_coprime
    with pytest.raises(PreconditionError) as e:
        qcc.entanglement_certificate(code)
    assert e.value.code == "f-not-coprime"


def test_certificate_singular_h1_gram():
    # a self-orthogonal left block makes H1 H1^dag rank deficient
    cert = qcc.entanglement_certificate(qcc.build(GF4, 15, (1,), G15))
    assert not cert.h1_gram_nonsingular
    assert not cert.satisfied
    assert cert.p_matrix is None
