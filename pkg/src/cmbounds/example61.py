"""Arithmetic verifier for the quartic CM field ramified only at 61 and the
abelian surface attached to it, plus the order-6 matrix-action computation
and the dimension-2 bound assembly.

All residue computations are brute-force or exponent-test exact arithmetic
mod a prime; the cube-root-of-unity matrix algebra is exact over integer
pairs (a, b) representing a + b*zeta3.  Complex floating point is forbidden
in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .bounds import factorize, is_prime, max_ell_small_field, euler_phi
from .snf import IntegerMatrix, matrix_det

PRO_ELL = "pro-ell"
INCONCLUSIVE = "inconclusive"


# ---------------------------------------------------------------------------
# residue symbols mod ell

@dataclass(frozen=True)
class ResidueSymbolTable:
    ell: int
    squares: frozenset
    fourth_powers: frozenset


def build_residue_table(ell):
    ell = int(ell)
    if ell == 2 or not is_prime(ell):
        raise ValueError(f"ell = {ell} must be an odd prime")
    squares = frozenset(pow(x, 2, ell) for x in range(1, ell))
    fourth = frozenset(pow(x, 4, ell) for x in range(1, ell))
    return ResidueSymbolTable(ell=ell, squares=squares, fourth_powers=fourth)


def _check_unit(a, ell):
    ell = int(ell)
    if ell == 2 or not is_prime(ell):
        raise ValueError(f"ell = {ell} must be an odd prime")
    a = int(a) % ell
    if a == 0:
        raise ValueError("a must be a unit mod ell")
    return a, ell


def residue_symbols(a, ell):
    """(is_square, is_fourth_power) for a mod ell, by exact exponentiation."""
    a, ell = _check_unit(a, ell)
    is_square = pow(a, (ell - 1) // 2, ell) == 1
    is_fourth = pow(a, (ell - 1) // gcd(4, ell - 1), ell) == 1
    return is_square, is_fourth


def hecke_epsilon(a, ell):
    """+1 on squares mod ell, -1 otherwise: the quadratic unit character."""
    a, ell = _check_unit(a, ell)
    return 1 if pow(a, (ell - 1) // 2, ell) == 1 else -1


def verify_rho_kernel(ell):
    """Check that eps(a) * a^2 is a fourth power mod ell for every unit a.

    This is the residue-field shadow of the mod-ell character being valued
    in fourth powers: the reflex norm squares the unit, and the quadratic
    character supplies the missing sign.  Requires ell = 1 mod 4 so that
    fourth powers have index 4.
    """
    ell = int(ell)
    if ell % 4 != 1:
        raise ValueError("ell must be 1 mod 4")
    table = build_residue_table(ell)
    for a in range(1, ell):
        eps = 1 if a in table.squares else -1
        if (eps * a * a) % ell not in table.fourth_powers:
            return False
    return True


# ---------------------------------------------------------------------------
# kernel orders and the pro-ell certificate

def rho_kernel_order(ell, ramification_length, power_index):
    """Order of the kernel of (local units of length e) -> units mod k-th powers.

    The local unit group has order (ell - 1) * ell^(e - 1); passing to the
    residue field and then modulo k-th powers leaves ((ell - 1)/k) * ell^(e-1)
    elements in the kernel.
    """
    ell = int(ell)
    e = int(ramification_length)
    k = int(power_index)
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    if e < 1:
        raise ValueError("ramification length must be >= 1")
    if k < 1 or (ell - 1) % k != 0:
        raise ValueError(f"power index {k} does not divide ell - 1 = {ell - 1}")
    return ((ell - 1) // k) * ell ** (e - 1)


@dataclass(frozen=True)
class ProEllCertificate:
    ell: int
    a_max: int
    cyc_degree: int
    verdict: str


def pro_ell_certificate(ell, a_max, cyc_degree):
    """Divisibility bookkeeping for the tower above the cyclotomic layer.

    The division-field degree is ell^k * a with a | a_max (from the kernel
    order) and cyc_degree | a (the cyclotomic layer sits inside).  When
    a_max equals cyc_degree both force a = cyc_degree, so everything above
    the cyclotomic layer has ell-power order: verdict "pro-ell".  Otherwise
    the arithmetic alone is inconclusive.
    """
    ell = int(ell)
    a_max = int(a_max)
    cyc_degree = int(cyc_degree)
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    if a_max < 1 or cyc_degree < 1:
        raise ValueError("a_max and cyc_degree must be positive")
    if cyc_degree % ell == 0:
        raise ValueError("cyc_degree must be prime to ell")
    verdict = PRO_ELL if a_max == cyc_degree else INCONCLUSIVE
    return ProEllCertificate(ell=ell, a_max=a_max, cyc_degree=cyc_degree, verdict=verdict)


def cyclotomic_relative_degree(ell, subfield_degree):
    """[K(mu_ell) : K] for K a degree-d subfield of the ell-th cyclotomic field."""
    ell = int(ell)
    d = int(subfield_degree)
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    phi = euler_phi(ell)
    if d < 1 or phi % d != 0:
        raise ValueError(f"subfield degree {d} does not divide phi({ell}) = {phi}")
    return phi // d


# ---------------------------------------------------------------------------
# exact arithmetic over Z[zeta3] and the order-6 matrix action

class Eisenstein:
    """a + b * zeta3 with integer a, b; zeta3 a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = int(a)
        self.b = int(b)

    def __add__(self, other):
        return Eisenstein(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return Eisenstein(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __mul__(self, other):
        # zeta^2 = -1 - zeta
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    def conj(self):
        # conj(zeta) = zeta^2 = -1 - zeta
        return Eisenstein(self.a - self.b, -self.b)

    def __eq__(self, other):
        if not isinstance(other, Eisenstein):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Eisenstein({self.a}, {self.b})"


E_ZERO = Eisenstein(0, 0)
E_ONE = Eisenstein(1, 0)
E_ZETA = Eisenstein(0, 1)


class EisensteinMatrix:
    """2x2 matrix with Eisenstein entries (a b; c d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __eq__(self, other):
        if not isinstance(other, EisensteinMatrix):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"EisensteinMatrix({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def rotation_action(m):
    """One application of the order-6 generator:
    (a b; c d) -> (conj d, zeta * conj c; conj(zeta) * conj b, conj a).
    """
    return EisensteinMatrix(
        m.d.conj(),
        E_ZETA * m.c.conj(),
        E_ZETA.conj() * m.b.conj(),
        m.a.conj(),
    )


def _square_map(m):
    # expected action of the generator squared
    zeta_sq = E_ZETA * E_ZETA
    zeta_conj_sq = E_ZETA.conj() * E_ZETA.conj()
    return EisensteinMatrix(m.a, zeta_sq * m.b, zeta_conj_sq * m.c, m.d)


def _z_basis_matrices():
    units = (E_ONE, E_ZETA)
    basis = []
    for slot in range(4):
        for u in units:
            entries = [E_ZERO] * 4
            entries[slot] = u
            basis.append(EisensteinMatrix(*entries))
    return basis


def _mult_minus_identity_det(w):
    # det of (multiplication by w) - id on Z[zeta3] with basis (1, zeta)
    one = w
    zeta = w * E_ZETA
    m = IntegerMatrix.from_rows([[one.a - 1, zeta.a], [one.b, zeta.b - 1]])
    return matrix_det(m)


@dataclass(frozen=True)
class C6ActionReport:
    order_six: bool
    square_action: bool
    fixed_ring_diagonal: bool

    @property
    def ok(self):
        return self.order_six and self.square_action and self.fixed_ring_diagonal

    def to_dict(self):
        return {
            "order_six": self.order_six,
            "square_action": self.square_action,
            "fixed_ring_diagonal": self.fixed_ring_diagonal,
            "ok": self.ok,
        }


def c6_action_check():
    """Verify the three assertions about the order-6 matrix action.

    (i) the generator has order exactly 6 on the eight Z-basis matrices;
    (ii) its square sends (a, b, c, d) to (a, zeta^2 b, conj(zeta)^2 c, d);
    (iii) the fixed ring of the square is exactly the diagonal {b = c = 0}.
    The action and its square are Z-linear, so checking (i) and (ii) on the
    Z-basis proves them on every matrix; (iii) reduces to the invertibility
    of (zeta^2 - 1) and (conj(zeta)^2 - 1) acting on Z[zeta3].
    """
    basis = _z_basis_matrices()

    iterates = {0: basis}
    current = basis
    for k in range(1, 7):
        current = [rotation_action(m) for m in current]
        iterates[k] = current
    order_six = iterates[6] == basis and all(
        iterates[k] != basis for k in range(1, 6)
    )

    square_action = all(
        got == _square_map(m) for got, m in zip(iterates[2], basis)
    )

    diagonal_fixed = all(
        iterates[2][i] == basis[i] for i in (0, 1, 6, 7)  # a and d slots
    )
    zeta_sq = E_ZETA * E_ZETA
    zeta_conj_sq = E_ZETA.conj() * E_ZETA.conj()
    off_diagonal_moves = (
        _mult_minus_identity_det(zeta_sq) != 0
        and _mult_minus_identity_det(zeta_conj_sq) != 0
    )
    fixed_ring_diagonal = diagonal_fixed and off_diagonal_moves

    return C6ActionReport(
        order_six=order_six,
        square_action=square_action,
        fixed_ring_diagonal=fixed_ring_diagonal,
    )


# ---------------------------------------------------------------------------
# dimension-2 bound assembly and the full verification suite

@dataclass(frozen=True)
class C12Assembly:
    value: int
    provenance: tuple


def assemble_c12(c21, ramified_prime_cap, simple_surface_cap=None):
    """max of the split-surface branch and the simple-surface branch.

    ``c21`` (the dimension-1 bound the split branch reduces to) and
    ``ramified_prime_cap`` are externally asserted constants; the residue
    cap of the simple branch is computed from the root-of-unity bound when
    not supplied.
    """
    c21 = int(c21)
    ramified_prime_cap = int(ramified_prime_cap)
    if c21 < 0 or ramified_prime_cap < 0:
        raise ValueError("asserted caps must be nonnegative")
    if simple_surface_cap is None:
        simple_surface_cap = max_ell_small_field(12, 3)
    simple_surface_cap = int(simple_surface_cap)
    simple_branch = max(ramified_prime_cap, simple_surface_cap)
    value = max(c21, simple_branch)
    provenance = (
        f"split branch: dimension-1 bound c21 = {c21} [user-asserted]",
        f"simple branch: max(ramified prime cap = {ramified_prime_cap} "
        f"[user-asserted], residue cap = {simple_surface_cap}) = {simple_branch}",
        f"value = max({c21}, {simple_branch}) = {value}",
    )
    return C12Assembly(value=value, provenance=provenance)


def verify61_report():
    """Run every check of the 61-example and report one entry per check."""
    checks = []

    def add(name, ok, detail):
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    table = build_residue_table(61)
    minus_one_sq, minus_one_fourth = residue_symbols(-1, 61)
    add(
        "residue-table",
        len(table.squares) == 30
        and len(table.fourth_powers) == 15
        and table.fourth_powers <= table.squares
        and minus_one_sq
        and not minus_one_fourth,
        "mod 61: 30 squares, 15 fourth powers, -1 a square but not a fourth power",
    )

    add(
        "rho-kernel-fourth-powers",
        verify_rho_kernel(61),
        "eps(a) * a^2 is a fourth power mod 61 for every unit a",
    )

    kernel = rho_kernel_order(61, 4, 4)
    add(
        "kernel-order",
        kernel == 15 * 61 ** 3,
        f"rho_kernel_order(61, 4, 4) = {kernel} = 15 * 61^3",
    )

    cyc = cyclotomic_relative_degree(61, 4)
    add("cyclotomic-degree", cyc == 15, f"[K(mu_61):K] = {cyc}")

    cert = pro_ell_certificate(61, 15, 15)
    add(
        "pro-ell-certificate",
        cert.verdict == PRO_ELL,
        f"a_max = cyc_degree = 15 forces verdict {cert.verdict}",
    )

    add(
        "disc-factorization",
        factorize(226981) == {61: 3},
        "226981 = 61^3",
    )

    c6 = c6_action_check()
    add("c6-action", c6.ok, c6.to_dict())

    # facts the suite relies on but does not compute (out of scope here)
    asserted = [
        "class number of the ramified quartic CM field is 1 (external input; "
        "quartic class-number computation is out of scope)",
        "ramification: the prime 61 is totally ramified with local length 4",
    ]
    return {
        "ok": all(ch["ok"] for ch in checks),
        "checks": checks,
        "asserted_inputs": asserted,
    }
