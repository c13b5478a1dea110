"""Scalar bound formulas: totients, division-field degree bounds, the prime
bound chain, the parametric discriminant cap, and supporting arithmetic.

No floating point anywhere: comparisons involving roots are restated as
integer inequalities on squared (or k-th powered) quantities, and the one
genuinely rational formula returns an exact Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def is_prime(n):
    n = int(n)
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n):
    """Prime factorization of n >= 1 as {p: exponent}, by trial division."""
    n = int(n)
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(m):
    m = int(m)
    if m < 1:
        raise ValueError("euler_phi needs a positive integer")
    result = m
    for p in factorize(m):
        result -= result // p
    return result


def euler_phi_sieve(limit):
    """List phi[0..limit] (phi[0] set to 0), for bulk audits."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for multiple in range(p, limit + 1, p):
                phi[multiple] -= phi[multiple] // p
    if limit >= 0:
        phi[0] = 0
    return phi


def max_mu(g):
    """Largest possible number of roots of unity in a field of degree 2g.

    Scans every m with phi(m) <= 2g; the scan range (4g)^2 is itself a
    consequence of phi(x) >= sqrt(x)/2.
    """
    g = int(g)
    if g < 1:
        raise ValueError("g must be >= 1")
    limit = (4 * g) ** 2
    phi = euler_phi_sieve(limit)
    best = 1
    for m in range(1, limit + 1):
        if phi[m] <= 2 * g:
            best = m
    return best


def division_field_lower_bound(ell, r, mu, deg_k_over_estar, f_order):
    """Exact value of (1 - 1/ell)^r * ell^r / (mu * [K:E*] * |F|^(2r))."""
    ell, r = int(ell), int(r)
    mu, deg, f = int(mu), int(deg_k_over_estar), int(f_order)
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    if r < 2:
        raise ValueError("rank r must be >= 2")
    if min(mu, deg, f) < 1:
        raise ValueError("mu, [K:E*] and |F| must be positive")
    return Fraction((ell - 1) ** r, mu * deg * f ** (2 * r))


def prop_key_bound(n, g):
    """The unramified-prime cap n * (g+2)^(3(g+1))."""
    n, g = int(n), int(g)
    if n < 1 or g < 1:
        raise ValueError("n and g must be positive")
    return n * (g + 2) ** (3 * (g + 1))


def prop_key_admissible(ell, n, g, disc_e):
    """Whether a prime survives the two-branch test: small, or ramified."""
    ell = int(ell)
    disc_e = int(disc_e)
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    if disc_e == 0:
        raise ValueError("discriminant must be nonzero")
    return ell <= prop_key_bound(n, g) or abs(disc_e) % ell == 0


def ribet_min_rank(g):
    """Smallest r >= 2 with 2^(r-2) >= g (integer form of r >= 2 + log2 g)."""
    g = int(g)
    if g < 1:
        raise ValueError("g must be >= 1")
    r = 2
    while 2 ** (r - 2) < g:
        r += 1
    return r


def refined_bound_check(ell, n, r):
    """Exact form of ell - 1 <= sqrt(n) * (r+1)^(2r), squared to avoid roots."""
    ell, n, r = int(ell), int(n), int(r)
    if r < 3:
        raise ValueError("the refined bound needs r >= 3")
    return (ell - 1) ** 2 <= n * (r + 1) ** (4 * r)


def integer_kth_root(x, k):
    """Largest t >= 0 with t^k <= x."""
    x, k = int(x), int(k)
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    if x in (0, 1) or k == 1:
        return x
    hi = 1 << (x.bit_length() // k + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def max_ell_small_field(mu_max, r):
    """Largest prime ell with (ell - 1)^(r-1) <= mu_max.

    This is the largest prime not excluded by comparing the cyclotomic
    degree ell - 1 against the division-field lower bound with the given
    root-of-unity cap.
    """
    mu_max, r = int(mu_max), int(r)
    if mu_max < 1:
        raise ValueError("mu_max must be >= 1")
    if r < 2:
        raise ValueError("r must be >= 2")
    cap = integer_kth_root(mu_max, r - 1) + 1  # ell <= cap
    for ell in range(cap, 1, -1):
        if is_prime(ell):
            return ell
    raise AssertionError("unreachable: 2 always qualifies")


def tsimerman_disc_cap(n, k, delta):
    """Largest integer d >= 0 with k * d^delta <= n, for exact rational k, delta.

    With delta = p/q and k = a/b the condition is a^q * d^p <= n^q * b^q,
    decided by exact integer powering and binary search on d.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    k = Fraction(k)
    delta = Fraction(delta)
    if k <= 0 or delta <= 0:
        raise ValueError("k and delta must be positive")
    p, q = delta.numerator, delta.denominator
    lhs_scale = k.numerator ** q
    rhs = n ** q * k.denominator ** q

    def ok(d):
        return lhs_scale * d ** p <= rhs

    if not ok(1):
        return 0
    hi = 1
    while ok(hi):
        hi *= 2
    lo = hi // 2  # ok(lo) holds, ok(hi) fails
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class FieldRecord:
    """One ingested CM-field data row."""

    label: str
    degree: int
    disc: int
    galois: str
    class_number: int | None = None

    def __post_init__(self):
        if self.degree < 2 or self.degree % 2 != 0:
            raise ValueError(f"degree {self.degree} must be a positive even integer")
        if self.disc == 0:
            raise ValueError("discriminant must be nonzero")
        if self.class_number is not None and self.class_number < 1:
            raise ValueError("class number must be positive when present")

    def g(self):
        return self.degree // 2


@dataclass(frozen=True)
class BoundInputs:
    """Scalar inputs of the bound chain.

    ``d_table`` maps g' to the endomorphism-field degree cap D(g'); it and
    the per-dimension discriminant maxima are user-asserted data, never
    defaulted.  ``tsimerman_params`` optionally carries the exact pair
    (k_g, delta_g) of the parametric discriminant cap.
    """

    n: int
    g: int
    delta: int | None = None
    d_table: dict = field(default_factory=dict)
    tsimerman_params: tuple | None = None

    def __post_init__(self):
        if self.n < 1 or self.g < 1:
            raise ValueError("n and g must be positive")
        for gp, dval in self.d_table.items():
            if int(gp) < 1 or int(dval) < 1:
                raise ValueError("d_table entries must be positive")


@dataclass(frozen=True)
class BoundReport:
    """Assembled bound chain with provenance for every number."""

    inputs: BoundInputs
    prop_key: int
    c2: int
    c1: int
    c: int
    provenance: tuple

    def to_json_dict(self):
        return {
            "inputs": {
                "n": self.inputs.n,
                "g": self.inputs.g,
                "d_table": {str(k): v for k, v in sorted(self.inputs.d_table.items())},
            },
            "prop_key": self.prop_key,
            "c2": self.c2,
            "c1": self.c1,
            "c": self.c,
            "provenance": list(self.provenance),
        }


def chain_bounds(inputs, delta_table):
    """Assemble the prime-bound chain from user-asserted data.

    ``delta_table`` maps every g' <= g to the asserted maximum |disc| over
    the admissible CM fields at the effective degree cap D(g) * n.  Missing
    entries fail loudly; the chain is only as good as its inputs and must
    never invent a default.
    """
    n, g = inputs.n, inputs.g
    if g not in inputs.d_table:
        raise ValueError(
            f"missing endomorphism-field degree cap D({g}); supply it explicitly"
        )
    d_g = int(inputs.d_table[g])
    n_eff = d_g * n
    missing = [gp for gp in range(1, g + 1) if gp not in delta_table]
    if missing:
        raise ValueError(
            "missing discriminant maxima for g' in "
            f"{missing}; supply delta for every g' <= {g}"
        )
    provenance = [
        f"effective degree cap n' = D({g}) * n = {d_g} * {n} = {n_eff} "
        "[D value user-asserted]",
    ]
    c2_values = {}
    for gp in range(1, g + 1):
        delta_gp = int(delta_table[gp])
        if delta_gp < 0:
            raise ValueError("discriminant maxima must be nonnegative")
        pk = prop_key_bound(n_eff, gp)
        c2_values[gp] = max(delta_gp, pk)
        provenance.append(
            f"c2(n'={n_eff}, g'={gp}) = max(delta={delta_gp} [user-asserted], "
            f"n' * (g'+2)^(3(g'+1)) = {pk}) = {c2_values[gp]}"
        )
    c2 = c2_values[g]
    c1 = max(c2_values.values())
    provenance.append(
        f"c1(n'={n_eff}, g={g}) = max over g' <= {g} of c2 = {c1}"
    )
    c = c1
    provenance.append(
        f"c(n={n}, g={g}) = c1 at the effective degree cap n' = {n_eff} -> {c}"
    )
    return BoundReport(
        inputs=inputs,
        prop_key=prop_key_bound(n_eff, g),
        c2=c2,
        c1=c1,
        c=c,
        provenance=tuple(provenance),
    )
