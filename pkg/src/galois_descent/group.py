"""Finite groups as explicit element sets over a family-supplied group law.

The engine never looks inside elements.  A :class:`GroupLaw` supplies the
identity, product, inverse and a sort key; a :class:`Group` is an immutable
set of elements closed under that law.  Subgroup enumeration works on an
integer Cayley table built from the ambient group.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable, Sequence
from functools import cached_property

log = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BOUND = 600
DEFAULT_CLOSURE_BOUND = 100_000


class GroupError(ValueError):
    pass


class BoundExceeded(GroupError):
    pass


class LagrangeViolation(AssertionError):
    """A subgroup order failed to divide the ambient order: the group law is broken."""


class GroupLaw:
    """Contract a curve family implements for its automorphism elements.

    Subclasses set ``identity`` and implement ``mul`` and ``inv``.  ``key``
    must give a total order consistent with equality; ``format`` and ``parse``
    implement the family's element grammar.
    """

    identity: object = None
    name = "abstract"

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def key(self, a):
        return a

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError(f"{self.name} has no element grammar")

    def power(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, a, limit: int = DEFAULT_CLOSURE_BOUND) -> int:
        x, n = a, 1
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
            if n > limit:
                raise BoundExceeded(f"element order exceeds {limit}")
        return n

    def conjugate(self, g, h):
        """Return g h g^-1."""
        return self.mul(self.mul(g, h), self.inv(g))


class Group:
    """An immutable finite group given by its element set."""

    def __init__(self, law: GroupLaw, elements: Iterable):
        self.law = law
        self.elements = frozenset(elements)

    @classmethod
    def from_elements(cls, law: GroupLaw, elements: Iterable) -> Group:
        """Build a group from a set, verifying it is one."""
        elements = frozenset(elements)
        if not is_group(law, elements):
            raise GroupError("element set is not closed under the group law")
        return cls(law, elements)

    @classmethod
    def trivial(cls, law: GroupLaw) -> Group:
        return cls(law, [law.identity])

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.sorted_elements)

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: Group) -> bool:
        return self.elements <= other.elements

    def __repr__(self):
        gens = ", ".join(self.law.format(g) for g in self.generators)
        return f"<Group order={self.order} gens=[{gens}]>"

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    @cached_property
    def sorted_elements(self) -> tuple:
        return tuple(sorted(self.elements, key=self.law.key))

    @cached_property
    def generators(self) -> tuple:
        """Canonical generating set: greedy over elements in sorted order."""
        law = self.law
        gens: list = []
        current = {law.identity}
        for x in self.sorted_elements:
            if x in current:
                continue
            gens.append(x)
            current = _dimino(law, current, gens, x, bound=len(self.elements))
            if len(current) == len(self.elements):
                break
        return tuple(gens)

    def is_abelian(self) -> bool:
        mul = self.law.mul
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for a in gens for b in gens)

    def is_cyclic(self) -> bool:
        return any(self.law.element_order(x) == self.order for x in self.elements)

    def to_json(self) -> dict:
        fmt = self.law.format
        return {
            "order": self.order,
            "generators": [fmt(g) for g in self.generators],
            "elements": [fmt(x) for x in self.sorted_elements],
        }


def _dimino(law: GroupLaw, current: set, gens: Sequence, new, bound: int) -> set:
    """Extend the group ``current`` (generated by ``gens`` minus ``new``) by ``new``.

    The result is grown as a union of right cosets of ``current``; a coset is
    added whenever a representative times a generator lands outside.
    """
    mul = law.mul
    base = list(current)
    result = set(current)
    reps = [law.identity]
    pending = [new]
    while pending or reps:
        while pending:
            r = pending.pop()
            if r in result:
                continue
            coset = [mul(h, r) for h in base]
            result.update(coset)
            if len(result) > bound:
                raise BoundExceeded(f"closure exceeds bound {bound}")
            reps.append(r)
        if not reps:
            break
        r = reps.pop()
        for s in gens:
            y = mul(r, s)
            if y not in result:
                pending.append(y)
    return result


def closure(generators: Iterable, law: GroupLaw, bound: int = DEFAULT_CLOSURE_BOUND) -> Group:
    """Smallest group containing ``generators``."""
    current = {law.identity}
    used: list = []
    for g in generators:
        if g in current:
            continue
        used.append(g)
        current = _dimino(law, current, used, g, bound)
    return Group(law, current)


def set_product(a: Group, b: Group) -> frozenset:
    if a.law is not b.law:
        raise GroupError("groups use different laws")
    mul = a.law.mul
    return frozenset(mul(x, y) for x in a.elements for y in b.elements)


def is_group(law: GroupLaw, elements: Iterable) -> bool:
    """True iff the finite set contains the identity and is closed under the law.

    Closes the set from a greedy generating subset and stops as soon as the
    closure leaves the set, so the cost stays near ``|S| * #generators``.
    """
    elements = frozenset(elements)
    if law.identity not in elements:
        return False
    current = {law.identity}
    gens: list = []
    for x in sorted(elements, key=law.key):
        if x in current:
            continue
        gens.append(x)
        try:
            current = _dimino(law, current, gens, x, bound=len(elements))
        except BoundExceeded:
            return False
        if not current <= elements:
            return False
        if len(current) == len(elements):
            return True
    return len(current) == len(elements)


def not_closed_witness(law: GroupLaw, elements: Iterable):
    """Return ``(a, b)`` with ``a*b`` outside the set, or None if it is closed."""
    elements = frozenset(elements)
    mul = law.mul
    ordered = sorted(elements, key=law.key)
    for a in ordered:
        for b in ordered:
            if mul(a, b) not in elements:
                return a, b
    return None


def is_normal(h: Group, g: Group) -> bool:
    return normality_witness(h, g) is None


def normality_witness(h: Group, g: Group):
    """Return ``(x, y)`` with x in G, y in H and x y x^-1 outside H, or None."""
    if not h.elements <= g.elements:
        raise GroupError("H is not a subset of G")
    law = h.law
    for x in g.generators:
        for y in h.generators:
            if law.conjugate(x, y) not in h.elements:
                return x, y
    return None


def intersection(a: Group, b: Group) -> Group:
    if a.law is not b.law:
        raise GroupError("groups use different laws")
    return Group(a.law, a.elements & b.elements)


def conjugate_group(h: Group, x) -> Group:
    law = h.law
    return Group(law, (law.conjugate(x, y) for y in h.elements))


class CosetLaw(GroupLaw):
    """Law on right cosets Hx of a normal subgroup, elements as frozensets."""

    name = "coset"

    def __init__(self, base_law: GroupLaw, kernel: Group, coset_of: dict):
        self.base_law = base_law
        self.kernel = kernel
        self._coset_of = coset_of
        self.identity = kernel.elements

    def rep(self, coset: frozenset):
        return min(coset, key=self.base_law.key)

    def mul(self, a, b):
        return self._coset_of[self.base_law.mul(self.rep(a), self.rep(b))]

    def inv(self, a):
        return self._coset_of[self.base_law.inv(self.rep(a))]

    def key(self, a):
        return self.base_law.key(self.rep(a))

    def format(self, a) -> str:
        return "H*" + self.base_law.format(self.rep(a))


class CosetGroup:
    """The quotient G/H for H normal in G."""

    def __init__(self, base: Group, kernel: Group):
        self.base = base
        self.kernel = kernel
        law = base.law
        coset_of: dict = {}
        cosets = []
        for x in base.sorted_elements:
            if x in coset_of:
                continue
            c = frozenset(law.mul(h, x) for h in kernel.elements)
            cosets.append(c)
            for y in c:
                coset_of[y] = c
        self.cosets = tuple(cosets)
        self.law = CosetLaw(law, kernel, coset_of)

    @property
    def order(self) -> int:
        return len(self.cosets)

    def coset(self, x) -> frozenset:
        return self.law._coset_of[x]

    def as_group(self) -> Group:
        return Group(self.law, self.cosets)


def quotient(g: Group, h: Group) -> CosetGroup:
    if not is_normal(h, g):
        raise GroupError("H is not normal in G")
    return CosetGroup(g, h)


class CayleyTable:
    """Integer-indexed multiplication table of a group.

    ``order`` fixes the element indexing; by default elements are indexed in
    sorted order.  Passing a shuffled order gives an independent enumeration
    route for determinism checks.
    """

    def __init__(self, group: Group, order: Sequence | None = None):
        law = group.law
        elems = list(order) if order is not None else list(group.sorted_elements)
        if frozenset(elems) != group.elements or len(elems) != group.order:
            raise GroupError("order must list every group element exactly once")
        self.group = group
        self.elements = elems
        self.index = {x: k for k, x in enumerate(elems)}
        idx = self.index
        self.mul = [[idx[law.mul(a, b)] for b in elems] for a in elems]
        self.inv = [idx[law.inv(a)] for a in elems]
        self.identity = idx[law.identity]

    def __len__(self):
        return len(self.elements)

    def mask_of(self, indices: Iterable[int]) -> int:
        m = 0
        for i in indices:
            m |= 1 << i
        return m

    def extend(self, members: list[int], mask: int, gens: list[int], new: int) -> tuple[list[int], int]:
        """Index-level Dimino step: the subgroup generated by ``members`` and ``new``."""
        mul = self.mul
        base = list(members)
        out = list(members)
        reps = [self.identity]
        pending = [new]
        all_gens = gens + [new]
        while pending or reps:
            while pending:
                r = pending.pop()
                if mask >> r & 1:
                    continue
                for h in base:
                    y = mul[h][r]
                    mask |= 1 << y
                    out.append(y)
                reps.append(r)
            if not reps:
                break
            r = reps.pop()
            row = mul[r]
            for s in all_gens:
                y = row[s]
                if not mask >> y & 1:
                    pending.append(y)
        return out, mask


def enumerate_subgroups(
    g: Group,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    order: Sequence | None = None,
) -> list[Group]:
    """Every subgroup of ``g`` exactly once, sorted by (order, sorted elements).

    Breadth-first: start from all cyclic subgroups, then repeatedly join each
    known subgroup with one outside element (one per right coset, since
    <H, g> = <H, hg>) and deduplicate by element mask.
    """
    if g.order > bound:
        raise BoundExceeded(f"group order {g.order} exceeds enumeration bound {bound}")
    table = CayleyTable(g, order)
    n = len(table)
    mul = table.mul

    found: dict[int, tuple[list[int], list[int]]] = {}
    queue: list[int] = []
    e = table.identity
    trivial = 1 << e
    found[trivial] = ([e], [])
    queue.append(trivial)
    for x in range(n):
        members, mask = table.extend([e], trivial, [], x)
        if mask not in found:
            found[mask] = (members, [x])
            queue.append(mask)

    head = 0
    while head < len(queue):
        hmask = queue[head]
        head += 1
        members, gens = found[hmask]
        covered = hmask
        for x in range(n):
            if covered >> x & 1:
                continue
            for h in members:
                covered |= 1 << mul[h][x]
            kmembers, kmask = table.extend(members, hmask, gens, x)
            if kmask not in found:
                found[kmask] = (kmembers, gens + [x])
                queue.append(kmask)

    law = g.law
    groups = []
    for members, _ in found.values():
        size = len(members)
        if g.order % size:
            raise LagrangeViolation(f"subgroup of order {size} in group of order {g.order}")
        groups.append(Group(law, (table.elements[i] for i in members)))
    groups.sort(key=lambda s: (s.order, [law.key(x) for x in s.sorted_elements]))
    log.info("enumerated %d subgroups of a group of order %d", len(groups), g.order)
    return groups


def shuffled_order(g: Group, seed: int) -> list:
    """A reproducible random element ordering, for cross-checking enumeration."""
    elems = list(g.sorted_elements)
    random.Random(seed).shuffle(elems)
    return elems
