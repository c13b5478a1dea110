import pytest

from cmbounds.bounds import is_prime
from cmbounds.example61 import (
    INCONCLUSIVE,
    PRO_ELL,
    E_ONE,
    E_ZETA,
    Eisenstein,
    EisensteinMatrix,
    E_ZERO,
    assemble_c12,
    build_residue_table,
    c6_action_check,
    cyclotomic_relative_degree,
    hecke_epsilon,
    pro_ell_certificate,
    residue_symbols,
    rho_kernel_order,
    rotation_action,
    verify61_report,
    verify_rho_kernel,
)

PRIMES_TO_200 = [p for p in range(3, 201) if is_prime(p)]


def square_table(ell):
    return {pow(x, 2, ell) for x in range(1, ell)}


def fourth_table(ell):
    return {pow(x, 4, ell) for x in range(1, ell)}


# --- residue symbols ---------------------------------------------------------

def test_residue_symbols_examples():
    assert residue_symbols(-1, 61) == (True, False)
    assert residue_symbols(1, 61) == (True, True)
    assert residue_symbols(2, 61) == (False, False)
    assert 2 not in square_table(61)


def test_residue_symbols_validation():
    with pytest.raises(ValueError):
        residue_symbols(61, 61)
    with pytest.raises(ValueError):
        residue_symbols(3, 2)
    with pytest.raises(ValueError):
        residue_symbols(3, 15)


def test_residue_symbols_vs_tables():
    for ell in (13, 17, 29, 61):
        sq, fp = square_table(ell), fourth_table(ell)
        for a in range(1, ell):
            assert residue_symbols(a, ell) == (a in sq, a in fp)


def test_hecke_epsilon():
    assert hecke_epsilon(3, 61) == 1  # 8^2 = 64 = 3 mod 61
    assert pow(8, 2, 61) == 3
    assert hecke_epsilon(2, 61) == -1
    assert hecke_epsilon(1, 61) == 1


def test_residue_table_invariants():
    for ell in PRIMES_TO_200:
        table = build_residue_table(ell)
        assert len(table.squares) == (ell - 1) // 2
        assert table.fourth_powers <= table.squares
        if ell % 4 == 1:
            assert len(table.fourth_powers) == (ell - 1) // 4
            assert ell - 1 in table.squares  # -1 is a square
            assert (ell - 1 in table.fourth_powers) == (ell % 8 == 1)


# --- the fourth-power kernel property ---------------------------------------

def test_verify_rho_kernel_examples():
    assert verify_rho_kernel(61) is True
    assert verify_rho_kernel(13) is True
    assert verify_rho_kernel(17) is False
    with pytest.raises(ValueError):
        verify_rho_kernel(7)


def test_verify_rho_kernel_mod8_pattern():
    for ell in PRIMES_TO_200:
        if ell % 8 == 5:
            assert verify_rho_kernel(ell) is True
        elif ell % 8 == 1:
            assert verify_rho_kernel(ell) is False


# --- kernel orders and certificates ------------------------------------------

def test_rho_kernel_order_examples():
    assert rho_kernel_order(61, 4, 4) == 15 * 61 ** 3 == 3404715
    assert rho_kernel_order(5, 1, 4) == 1
    assert rho_kernel_order(13, 2, 4) == 39


def test_rho_kernel_order_validation():
    with pytest.raises(ValueError):
        rho_kernel_order(61, 4, 7)  # 7 does not divide 60
    with pytest.raises(ValueError):
        rho_kernel_order(61, 0, 4)
    with pytest.raises(ValueError):
        rho_kernel_order(62, 1, 1)


def test_rho_kernel_order_unit_group_identity():
    for ell in (5, 13, 61):
        for e in (1, 2, 3, 4):
            for k in (1, 2, 4):
                if (ell - 1) % k:
                    continue
                assert rho_kernel_order(ell, e, k) * k == (ell - 1) * ell ** (e - 1)


@pytest.mark.parametrize(
    "ell,a_max,cyc,verdict",
    [
        (61, 15, 15, PRO_ELL),
        (61, 15, 5, INCONCLUSIVE),
        (13, 12, 12, PRO_ELL),
        (13, 12, 6, INCONCLUSIVE),
        (5, 1, 1, PRO_ELL),
    ],
)
def test_pro_ell_certificate(ell, a_max, cyc, verdict):
    cert = pro_ell_certificate(ell, a_max, cyc)
    assert cert.verdict == verdict
    assert (cert.verdict == PRO_ELL) == (a_max == cyc)


def test_pro_ell_certificate_validation():
    with pytest.raises(ValueError):
        pro_ell_certificate(61, 15, 61)  # divisible by ell
    with pytest.raises(ValueError):
        pro_ell_certificate(60, 15, 15)


def test_cyclotomic_relative_degree():
    assert cyclotomic_relative_degree(61, 4) == 15
    assert cyclotomic_relative_degree(61, 1) == 60
    assert cyclotomic_relative_degree(13, 4) == 3
    with pytest.raises(ValueError):
        cyclotomic_relative_degree(61, 7)


# --- exact arithmetic over Z[zeta3] ------------------------------------------

def test_eisenstein_ring_identities():
    zeta = E_ZETA
    assert zeta * zeta * zeta == E_ONE
    assert E_ONE + zeta + zeta * zeta == E_ZERO
    assert zeta.conj() == zeta * zeta


def test_eisenstein_conjugation_is_ring_automorphism():
    samples = [Eisenstein(a, b) for a in (-2, 0, 1, 3) for b in (-1, 0, 2, 5)]
    for x in samples:
        assert x.conj().conj() == x
        for y in samples:
            assert (x * y).conj() == x.conj() * y.conj()
            assert (x + y).conj() == x.conj() + y.conj()


def test_rotation_basis_examples():
    zeta = E_ZETA
    e12 = EisensteinMatrix(E_ZERO, E_ONE, E_ZERO, E_ZERO)
    squared = rotation_action(rotation_action(e12))
    assert squared == EisensteinMatrix(E_ZERO, zeta * zeta, E_ZERO, E_ZERO)
    identity = EisensteinMatrix(E_ONE, E_ZERO, E_ZERO, E_ONE)
    assert rotation_action(identity) == identity
    # sixth iterate returns every basis matrix
    for slot in range(4):
        for unit in (E_ONE, zeta):
            entries = [E_ZERO] * 4
            entries[slot] = unit
            m = EisensteinMatrix(*entries)
            out = m
            for _ in range(6):
                out = rotation_action(out)
            assert out == m


def test_c6_action_check():
    report = c6_action_check()
    assert report.order_six
    assert report.square_action
    assert report.fixed_ring_diagonal
    assert report.ok
    assert report.to_dict()["ok"] is True


# --- assembly and the full suite ---------------------------------------------

def test_assemble_c12_examples():
    assert assemble_c12(163, 61).value == 163
    assert assemble_c12(0, 61).value == 61
    assert assemble_c12(163, 200).value == 200
    assert assemble_c12(163, 61, 3).value == 163
    assert len(assemble_c12(163, 61).provenance) == 3


def test_verify61_report():
    report = verify61_report()
    assert report["ok"] is True
    names = [c["name"] for c in report["checks"]]
    assert names == [
        "residue-table",
        "rho-kernel-fourth-powers",
        "kernel-order",
        "cyclotomic-degree",
        "pro-ell-certificate",
        "disc-factorization",
        "c6-action",
    ]
    assert all(c["ok"] for c in report["checks"])
