"""CM types over finite Galois data: reflex fields, reflex-norm lattice maps,
motivic-torus rank and component-group order.

A CM field of degree 2g is modeled by a triple (G, H, c): a finite group G
(the Galois group of a closure), the subgroup H fixing the field, and a
central involution c playing the role of complex conjugation.  A CM type is
a set of left cosets of H containing exactly one of each pair {aH, c*aH}.

The reflex norm is represented purely through its map of cocharacter
lattices Z[G/H*] -> Z[G/H]; no torus is ever materialized.  The
Mumford-Tate rank and the component-group order of the reflex-norm kernel
reduce to exact integer linear algebra on these lattices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .groups import (
    Subgroup,
    build_group,
    coset_structure,
    is_central_involution,
    subgroups_containing,
)
from .snf import IntegerMatrix, integer_rank, smith_normal_form


class CMFieldSymbol:
    """Group-theoretic avatar of a CM field: (G, H, c) plus optional disc.

    Validates that c is a central involution outside H, that [G:H] is even,
    and that c acts on the cosets G/H as a fixed-point-free involution.
    Degenerate data (index < 2, or c inside H) is rejected here rather than
    in the operations.
    """

    __slots__ = ("group", "field_subgroup", "conj", "disc", "cosets", "g")

    def __init__(self, group, field_subgroup, conj, disc=None):
        if field_subgroup.parent != group:
            raise ValueError("field subgroup does not belong to the group")
        if not is_central_involution(group, conj):
            raise ValueError(f"element {conj} is not a central involution")
        if conj in field_subgroup:
            raise ValueError("complex conjugation lies in the field subgroup")
        index = field_subgroup.index()
        if index < 2 or index % 2 != 0:
            raise ValueError(f"degree [G:H] = {index} must be even and >= 2")
        cs = coset_structure(group, field_subgroup)
        act_c = cs.action[conj]
        for k in range(len(cs)):
            if act_c[k] == k:
                raise ValueError("conjugation fixes a coset of H")
            if act_c[act_c[k]] != k:
                raise ValueError("conjugation is not an involution on cosets")
        self.group = group
        self.field_subgroup = field_subgroup
        self.conj = conj
        self.disc = None if disc is None else int(disc)
        self.cosets = cs
        self.g = index // 2

    def degree(self):
        return 2 * self.g

    def __eq__(self, other):
        if not isinstance(other, CMFieldSymbol):
            return NotImplemented
        return (
            self.group == other.group
            and self.field_subgroup == other.field_subgroup
            and self.conj == other.conj
            and self.disc == other.disc
        )

    def __hash__(self):
        return hash((self.group, self.field_subgroup, self.conj, self.disc))

    def __repr__(self):
        return (
            f"CMFieldSymbol(order={self.group.order}, "
            f"H={self.field_subgroup.elements}, c={self.conj})"
        )


class CMType:
    """A CM type: one coset from each conjugate pair of G/H."""

    __slots__ = ("field", "phi")

    def __init__(self, field, phi):
        phi = frozenset(int(x) for x in phi)
        cs = field.cosets
        n_cosets = len(cs)
        if any(not 0 <= k < n_cosets for k in phi):
            raise ValueError("coset index out of range")
        if len(phi) != field.g:
            raise ValueError(f"CM type must pick {field.g} cosets, got {len(phi)}")
        act_c = cs.action[field.conj]
        conj_phi = {act_c[k] for k in phi}
        if phi & conj_phi:
            raise ValueError("CM type meets its own conjugate")
        if len(phi | conj_phi) != n_cosets:
            raise ValueError("CM type and its conjugate do not cover all cosets")
        self.field = field
        self.phi = phi

    def phi_lift(self):
        """All group elements whose H-coset lies in phi."""
        cs = self.field.cosets
        out = set()
        for k in self.phi:
            out.update(cs.cosets[k])
        return frozenset(out)

    def indicator(self):
        n = len(self.field.cosets)
        return tuple(1 if k in self.phi else 0 for k in range(n))

    def __eq__(self, other):
        if not isinstance(other, CMType):
            return NotImplemented
        return self.field == other.field and self.phi == other.phi

    def __hash__(self):
        return hash((self.field, self.phi))

    def __repr__(self):
        return f"CMType(phi={sorted(self.phi)})"


@dataclass(frozen=True)
class ReflexDatum:
    """Reflex subgroup H*, reflex type as cosets of H*, and [G:H*]."""

    hstar: Subgroup
    phistar: frozenset
    reflex_degree: int


@dataclass(frozen=True)
class MTInfo:
    r: int
    f_order: int


def enumerate_cm_types(field):
    """All 2^g CM types of a field symbol, lexicographically ordered."""
    cs = field.cosets
    act_c = cs.action[field.conj]
    pairs = []
    seen = set()
    for k in range(len(cs)):
        if k in seen:
            continue
        seen.add(k)
        seen.add(act_c[k])
        pairs.append((k, act_c[k]))
    choices = [
        tuple(sorted(pick)) for pick in product(*pairs)
    ]  # one coset from each pair
    choices.sort()
    return [CMType(field, pick) for pick in choices]


def reflex(t):
    """Reflex datum of a CM type.

    H* is the left-multiplication stabilizer of phi as a coset set, and the
    reflex type collects the cosets sigma^{-1} H* for sigma running over the
    lift of phi to G.
    """
    field = t.field
    group = field.group
    cs = field.cosets
    phi = t.phi
    stab = [
        a
        for a in range(group.order)
        if all(cs.action[a][k] in phi for k in phi)
    ]
    hstar = Subgroup(group, stab)
    cs_star = coset_structure(group, hstar)
    phistar = frozenset(cs_star.coset_of[group.inverse[s]] for s in t.phi_lift())
    return ReflexDatum(
        hstar=hstar, phistar=phistar, reflex_degree=len(cs_star)
    )


def reflex_type(t, rd=None):
    """The reflex as a full CM type on the reflex field symbol."""
    if rd is None:
        rd = reflex(t)
    field = CMFieldSymbol(t.field.group, rd.hstar, t.field.conj)
    return CMType(field, rd.phistar)


def reflex_norm_matrix(t, rd):
    """Cocharacter-lattice map Z[G/H*] -> Z[G/H] of the reflex norm.

    The column for the H*-coset with canonical representative b is the
    indicator of the coset set b * phi; equivalently entry (i, j) is 1 when
    coset_i = b_j * phi_coset for some member of phi.  The left/right
    orientation is pinned by two anchors: on an imaginary quadratic symbol
    the matrix is the identity, and on the cyclic quartic symbol with
    phi = {1, sigma} it equals I + P(sigma^3) with P the row-convention
    coset permutation matrix.
    """
    field = t.field
    group = field.group
    cs = field.cosets
    cs_star = coset_structure(group, rd.hstar)
    nrows = len(cs)
    ncols = len(cs_star)
    entries = [0] * (nrows * ncols)
    for j in range(ncols):
        b = cs_star.reps[j]
        act_b = cs.action[b]
        for k in t.phi:
            entries[act_b[k] * ncols + j] += 1
    m = IntegerMatrix(nrows, ncols, entries)
    if any(x not in (0, 1) for x in m.entries):
        raise AssertionError("reflex norm columns must be 0/1 indicators")
    return m


def mt_rank(t):
    """Mumford-Tate rank: rational rank of the translate span of the type.

    Computed as the integer rank of the matrix whose rows are the
    indicators of g * phi for g running over G (duplicates dropped); this
    is the dimension of the smallest rationally defined subtorus whose
    cocharacter space contains the type indicator.
    """
    field = t.field
    cs = field.cosets
    n = len(cs)
    rows = set()
    for g in range(field.group.order):
        act = cs.action[g]
        image = {act[k] for k in t.phi}
        rows.add(tuple(1 if k in image else 0 for k in range(n)))
    return integer_rank(sorted(rows))


def component_group_order(t):
    """Order of the component group of the reflex-norm kernel.

    Torsion of the cokernel of the transpose of the cocharacter map,
    read off the Smith normal form divisors.
    """
    m = reflex_norm_matrix(t, reflex(t))
    return smith_normal_form(m.transpose()).torsion_order


def mt_info(t):
    return MTInfo(r=mt_rank(t), f_order=component_group_order(t))


def is_primitive(t):
    """True iff the type is not induced from a strictly smaller CM symbol.

    A witness of imprimitivity is a subgroup H' with H < H' <= G, c not in
    H', whose right multiplication preserves the lift of phi.
    """
    field = t.field
    group = field.group
    h_elems = field.field_subgroup.elements
    phi_lift = t.phi_lift()
    c = field.conj
    for candidate in subgroups_containing(group, h_elems):
        if len(candidate) == len(h_elems):
            continue
        if c in candidate:
            continue
        if all(group.table[s][h] in phi_lift for s in phi_lift for h in candidate):
            return False
    return True


def parse_cm_descriptor(text):
    """Parse ``<group-spec>;H=<indices>;c=<index>;phi=<coset indices>``."""
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 4:
        raise ValueError(
            "descriptor must have four ';'-separated parts: "
            "<group>;H=<indices>;c=<index>;phi=<coset indices>"
        )
    spec = parts[0]
    fields = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    missing = {"H", "c", "phi"} - set(fields)
    if missing:
        raise ValueError(f"descriptor missing {sorted(missing)}")
    group = build_group(spec)
    h = Subgroup(group, [int(x) for x in fields["H"].split(",") if x.strip()])
    conj = int(fields["c"])
    field = CMFieldSymbol(group, h, conj)
    phi = [int(x) for x in fields["phi"].split(",") if x.strip()]
    return CMType(field, phi)


# Deterministic catalog used by the enumeration property suites: every
# descriptor-buildable group of order <= 16 (cyclic, two-factor products,
# dihedral), explicitly covering C6, D4, D6 and C2xC4.
def scope_descriptors(max_order=16):
    specs = [f"C{m}" for m in range(2, max_order + 1)]
    specs += [
        f"C{m}xC{k}"
        for m in range(2, max_order + 1)
        for k in range(m, max_order + 1)
        if m * k <= max_order
    ]
    specs += [f"D{m}" for m in range(2, max_order // 2 + 1)]
    return specs


def cm_enumeration_scope(max_order=16):
    """All valid CM field symbols over the scope catalog.

    For every catalog group, every subgroup H of even index >= 2 is paired
    with every central involution outside H.
    """
    symbols = []
    for spec in scope_descriptors(max_order):
        group = build_group(spec)
        involutions = group.central_involutions()
        if not involutions:
            continue
        for elems in subgroups_containing(group, (0,)):
            index = group.order // len(elems)
            if index < 2 or index % 2 != 0:
                continue
            eset = set(elems)
            for c in involutions:
                if c in eset:
                    continue
                symbols.append(
                    CMFieldSymbol(group, Subgroup(group, elems), c)
                )
    return symbols
