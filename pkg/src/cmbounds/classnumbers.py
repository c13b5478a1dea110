"""Class numbers of imaginary quadratic discriminants by reduced-form counting.

The class number returned is the form class number of the discriminant: the
number of primitive reduced integral binary quadratic forms (a, b, c) with
b^2 - 4ac = d, |b| <= a <= c and b >= 0 whenever |b| = a or a = c.  For
fundamental d this is the ideal class number of Q(sqrt(d)); non-fundamental
discriminants are accepted with these form-class semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .bounds import factorize

SEARCH_NOTE = "search-bounded: completeness requires an external effective bound"


def _check_discriminant(d):
    d = int(d)
    if d >= 0:
        raise ValueError("discriminant must be negative")
    if d % 4 not in (0, 1):
        raise ValueError("discriminant must be 0 or 1 mod 4")
    return d


def reduced_forms(d):
    """All primitive reduced forms of discriminant d < 0, sorted by (a, b)."""
    d = _check_discriminant(d)
    forms = []
    for a in range(1, isqrt(-d // 3) + 1):
        for b in range(-a, a + 1):
            if (b - d) % 2 != 0:
                continue
            num = b * b - d
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue  # count (a, -b, c) ~ (a, b, c) once
            if gcd(gcd(a, b), c) != 1:
                continue  # form class numbers count primitive forms only
            forms.append((a, b, c))
    forms.sort()
    return forms


def class_number_imag_quadratic(d):
    """Form class number of a negative discriminant."""
    return len(reduced_forms(d))


def is_fundamental_discriminant(d):
    d = _check_discriminant(d)
    if d % 4 == 1:
        return _is_squarefree(-d)
    m = d // 4
    return m % 4 in (2, 3) and _is_squarefree(-m)


def _is_squarefree(n):
    return all(e == 1 for e in factorize(n).values())


@dataclass(frozen=True)
class DiscSearchResult:
    """Search-bounded list of (discriminant, class number) pairs.

    The search cannot certify completeness on its own; ``note`` flags that
    an external effective bound is required to promote it to a full list.
    """

    entries: tuple
    h_max: int
    search_limit: int
    fundamental_only: bool
    note: str = SEARCH_NOTE

    def discriminants(self):
        return [d for d, _ in self.entries]


def discs_with_class_number_at_most(h_max, search_limit, fundamental_only=False):
    """All d with -search_limit <= d < 0, d = 0 or 1 mod 4, h(d) <= h_max."""
    h_max = int(h_max)
    search_limit = int(search_limit)
    if h_max < 1:
        raise ValueError("h_max must be >= 1")
    if search_limit < 1:
        raise ValueError("search_limit must be >= 1")
    entries = []
    for d in range(-3, -search_limit - 1, -1):
        if d % 4 not in (0, 1):
            continue
        if fundamental_only and not is_fundamental_discriminant(d):
            continue
        h = class_number_imag_quadratic(d)
        if h <= h_max:
            entries.append((d, h))
    return DiscSearchResult(
        entries=tuple(entries),
        h_max=h_max,
        search_limit=search_limit,
        fundamental_only=fundamental_only,
    )
