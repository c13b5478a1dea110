"""Finite groups given by explicit multiplication tables.

Groups are stored as full Cayley tables with the identity pinned at index 0.
This is enough to model Galois groups of the small Galois closures the rest
of the package works with (cyclic, bicyclic, dihedral, S4 and direct
products thereof, order <= 64), and keeps every validation step an exact,
exhaustive check.
"""

from __future__ import annotations

import re
from itertools import permutations

MAX_ORDER = 64

_DESCRIPTOR_RE = re.compile(r"^(C|D)(\d+)$")


class FiniteGroup:
    """A finite group: ``table[i][j]`` is the index of ``g_i * g_j``.

    The identity is always index 0.  Construction validates the Latin-square
    property, the identity row/column, associativity on all triples and the
    existence of two-sided inverses.
    """

    __slots__ = ("order", "table", "element_names", "inverse", "_hash")

    def __init__(self, table, element_names=None):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n < 1:
            raise ValueError("empty multiplication table")
        if n > MAX_ORDER:
            raise ValueError(f"group order {n} exceeds supported maximum {MAX_ORDER}")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"table row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"table entry {x} out of range 0..{n - 1}")
        for j in range(n):
            if rows[0][j] != j:
                raise ValueError("row 0 is not the identity permutation")
            if rows[j][0] != j:
                raise ValueError("column 0 is not the identity permutation")
        full = frozenset(range(n))
        for i in range(n):
            if frozenset(rows[i]) != full:
                raise ValueError(f"row {i} is not a permutation (not a Latin square)")
            if frozenset(rows[j][i] for j in range(n)) != full:
                raise ValueError(f"column {i} is not a permutation (not a Latin square)")
        for i in range(n):
            ti = rows[i]
            for j in range(n):
                tij = ti[j]
                tj = rows[j]
                for k in range(n):
                    if rows[tij][k] != ti[tj[k]]:
                        raise ValueError(
                            f"associativity fails at triple ({i}, {j}, {k})"
                        )
        inverse = [-1] * n
        for i in range(n):
            for j in range(n):
                if rows[i][j] == 0 and rows[j][i] == 0:
                    inverse[i] = j
                    break
            if inverse[i] < 0:
                raise ValueError(f"element {i} has no two-sided inverse")

        if element_names is None:
            element_names = tuple(f"g{i}" for i in range(n))
        else:
            element_names = tuple(str(s) for s in element_names)
            if len(element_names) != n:
                raise ValueError("element_names length does not match order")

        self.order = n
        self.table = rows
        self.element_names = element_names
        self.inverse = tuple(inverse)
        self._hash = hash((rows, element_names))

    def mul(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        return self.inverse[i]

    def elem_order(self, i):
        x = i
        k = 1
        while x != 0:
            x = self.table[x][i]
            k += 1
        return k

    def center(self):
        """Indices of elements commuting with everything."""
        n = self.order
        return tuple(
            z for z in range(n)
            if all(self.table[z][g] == self.table[g][z] for g in range(n))
        )

    def central_involutions(self):
        return tuple(z for z in self.center() if z != 0 and self.table[z][z] == 0)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table and self.element_names == other.element_names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class Subgroup:
    """A subgroup of a ``FiniteGroup``, stored as a sorted tuple of indices."""

    __slots__ = ("parent", "elements", "_elemset")

    def __init__(self, parent, elements):
        elems = tuple(sorted(set(int(x) for x in elements)))
        if not elems or elems[0] != 0:
            raise ValueError("subgroup must contain the identity (index 0)")
        eset = frozenset(elems)
        for x in elems:
            if not 0 <= x < parent.order:
                raise ValueError(f"element index {x} out of range")
            if parent.inverse[x] not in eset:
                raise ValueError(f"subgroup not closed under inversion at {x}")
            for y in elems:
                if parent.table[x][y] not in eset:
                    raise ValueError(
                        f"subgroup not closed under multiplication at ({x}, {y})"
                    )
        self.parent = parent
        self.elements = elems
        self._elemset = eset

    def __contains__(self, x):
        return x in self._elemset

    def __len__(self):
        return len(self.elements)

    def index(self):
        return self.parent.order // len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.elements == other.elements

    def __hash__(self):
        return hash((self.parent, self.elements))

    def __repr__(self):
        return f"Subgroup({self.elements})"


class CosetStructure:
    """Left cosets of H in G with the left-multiplication action on them.

    Cosets are listed in increasing order of their canonical representative
    (the minimal element index), so identical inputs always produce the same
    ordering.  ``action[g][k]`` is the index of the coset ``g * cosets[k]``.
    """

    __slots__ = ("group", "subgroup", "cosets", "reps", "coset_of", "action")

    def __init__(self, group, subgroup, cosets, reps, coset_of, action):
        self.group = group
        self.subgroup = subgroup
        self.cosets = cosets
        self.reps = reps
        self.coset_of = coset_of
        self.action = action

    def __len__(self):
        return len(self.cosets)

    def __repr__(self):
        return f"CosetStructure({len(self.cosets)} cosets of {self.subgroup!r})"


def coset_structure(group, subgroup):
    if subgroup.parent != group:
        raise ValueError("subgroup does not belong to the given group")
    n = group.order
    table = group.table
    coset_of = [-1] * n
    cosets = []
    for a in range(n):
        if coset_of[a] >= 0:
            continue
        members = tuple(sorted(table[a][h] for h in subgroup.elements))
        idx = len(cosets)
        cosets.append(members)
        for m in members:
            coset_of[m] = idx
    # representatives are minimal members; scanning a in increasing order
    # already yields cosets sorted by representative
    reps = tuple(c[0] for c in cosets)
    action = tuple(
        tuple(coset_of[table[g][rep]] for rep in reps) for g in range(n)
    )
    return CosetStructure(group, subgroup, tuple(cosets), reps, tuple(coset_of), action)


def is_central_involution(group, c):
    """True iff c is a non-identity central element squaring to the identity."""
    if not 0 <= c < group.order:
        raise ValueError(f"element index {c} out of range")
    if c == 0 or group.table[c][c] != 0:
        return False
    return all(group.table[c][g] == group.table[g][c] for g in range(group.order))


def subgroup_closure(group, seed):
    """Sorted tuple of indices of the subgroup generated by ``seed``."""
    elems = {0}
    frontier = [0]
    for x in seed:
        x = int(x)
        if x not in elems:
            elems.add(x)
            frontier.append(x)
    while frontier:
        x = frontier.pop()
        for y in tuple(elems):
            for z in (group.table[x][y], group.table[y][x]):
                if z not in elems:
                    elems.add(z)
                    frontier.append(z)
        xi = group.inverse[x]
        if xi not in elems:
            elems.add(xi)
            frontier.append(xi)
    return tuple(sorted(elems))


def subgroups_containing(group, base=(0,)):
    """All subgroups of ``group`` containing ``base``, as sorted index tuples.

    Breadth-first walk of the subgroup lattice: every overgroup of ``base``
    is reached by repeatedly adjoining one element and closing.
    """
    start = subgroup_closure(group, base)
    seen = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        cset = set(current)
        for x in range(group.order):
            if x in cset:
                continue
            bigger = subgroup_closure(group, current + (x,))
            if bigger not in seen:
                seen.add(bigger)
                frontier.append(bigger)
    return sorted(seen, key=lambda t: (len(t), t))


def all_subgroups(group):
    return subgroups_containing(group, (0,))


def _cyclic(m):
    if m < 1:
        raise ValueError("cyclic order must be >= 1")
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    names = ["1"] + ["σ" if i == 1 else f"σ^{i}" for i in range(1, m)]
    return table, names


def _dihedral(m):
    # order 2m: indices 0..m-1 are rotations r^i, m..2m-1 are reflections s*r^i
    if m < 1:
        raise ValueError("dihedral parameter must be >= 1")
    n = 2 * m

    def mul(x, y):
        ax, ix = divmod(x, m)
        ay, iy = divmod(y, m)
        if ay == 0:
            i = (ix + iy) % m
        else:
            i = (iy - ix) % m
        return ((ax + ay) % 2) * m + i

    table = [[mul(i, j) for j in range(n)] for i in range(n)]
    names = ["1"] + [f"r^{i}" if i > 1 else "r" for i in range(1, m)]
    names += ["s"] + [f"sr^{i}" if i > 1 else "sr" for i in range(1, m)]
    return table, names


def _cycle_name(perm):
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "id"


def _symmetric4():
    elems = sorted(permutations(range(4)))  # identity first
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [index[tuple(p[q[x]] for x in range(4))] for q in elems] for p in elems
    ]
    names = [_cycle_name(p) for p in elems]
    return table, names


def _direct_product(t1, n1, t2, n2):
    o1, o2 = len(t1), len(t2)
    if o1 * o2 > MAX_ORDER:
        raise ValueError(f"product order {o1 * o2} exceeds maximum {MAX_ORDER}")
    # index of the pair (a, b) is a * o2 + b
    table = [
        [t1[i // o2][j // o2] * o2 + t2[i % o2][j % o2] for j in range(o1 * o2)]
        for i in range(o1 * o2)
    ]
    names = [f"({n1[i // o2]},{n2[i % o2]})" for i in range(o1 * o2)]
    return table, names


def _factor_table(token):
    if token == "S4":
        return _symmetric4()
    m = _DESCRIPTOR_RE.match(token)
    if not m:
        raise ValueError(f"malformed group descriptor component {token!r}")
    kind, num = m.group(1), int(m.group(2))
    if kind == "C":
        return _cyclic(num)
    return _dihedral(num)


def build_group(spec):
    """Build a validated group from a descriptor string or an explicit table.

    Descriptors: ``C<m>`` (cyclic), ``D<m>`` (dihedral of order 2m), ``S4``,
    and ``x``-joined direct products such as ``C2xC4`` or ``D6xC2``.
    Anything that is not a string is treated as a multiplication table.
    """
    if isinstance(spec, FiniteGroup):
        return spec
    if not isinstance(spec, str):
        return FiniteGroup(spec)
    tokens = spec.split("x")
    if not tokens or any(not t for t in tokens):
        raise ValueError(f"malformed group descriptor {spec!r}")
    table, names = _factor_table(tokens[0])
    for token in tokens[1:]:
        t2, n2 = _factor_table(token)
        table, names = _direct_product(table, names, t2, n2)
    return FiniteGroup(table, names)


def load_group_table(path):
    """Read a group from a table file.

    Format: first non-comment line is the order n, the next n lines are the
    n rows of the table (space-separated element indices), and optional
    trailing lines ``name <i> <string>`` assign display names.  Lines whose
    first non-blank character is ``#`` are comments.
    """
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError(f"{path}: empty group table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"{path}: first line must be the group order") from None
    if len(lines) < n + 1:
        raise ValueError(f"{path}: expected {n} table rows, found {len(lines) - 1}")
    table = []
    for k in range(1, n + 1):
        try:
            row = [int(tok) for tok in lines[k].split()]
        except ValueError:
            raise ValueError(f"{path}: non-integer entry in table row {k}") from None
        table.append(row)
    names = None
    rest = lines[n + 1:]
    if rest:
        names = [f"g{i}" for i in range(n)]
        for ln in rest:
            parts = ln.split(None, 2)
            if len(parts) != 3 or parts[0] != "name":
                raise ValueError(f"{path}: malformed name line {ln!r}")
            idx = int(parts[1])
            if not 0 <= idx < n:
                raise ValueError(f"{path}: name index {idx} out of range")
            names[idx] = parts[2]
    return FiniteGroup(table, names)
