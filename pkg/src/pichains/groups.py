"""Finite permutation groups: construction, order, membership, classes,
normalizers, centralizer orders, and coset (quotient) actions.

A group carries a stabilizer chain built with a deterministic Schreier-Sims
algorithm; the chain certifies the order, decides membership, and enumerates
elements.  Everything downstream (conjugacy classes, normalizers, subgroup
enumeration) runs by exhaustive element enumeration under a hard order bound,
which is ample for the group sizes this package targets.

All operations are pure; groups are immutable after construction and cache
derived data internally.
"""

from __future__ import annotations

from math import lcm

from .perms import Permutation, _conj, _identity, _inv, _mul, _order

DEFAULT_ENUMERATION_BOUND = 20000


class EnumerationBoundError(ValueError):
    """The group is too large for exhaustive enumeration."""


class _Level:
    """One stabilizer-chain level: a base point, the strong generators that
    fix all earlier base points, and a transversal of the base orbit storing
    (u, u^-1) with base^u = point."""

    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int, identity: tuple[int, ...]):
        self.base = base
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
            base: (identity, identity)
        }

    def rebuild(self, identity: tuple[int, ...]) -> None:
        self.transversal = {self.base: (identity, identity)}
        queue = [self.base]
        while queue:
            pt = queue.pop(0)
            u = self.transversal[pt][0]
            for g in self.gens:
                img = g[pt - 1]
                if img not in self.transversal:
                    ug = _mul(u, g)
                    self.transversal[img] = (ug, _inv(ug))
                    queue.append(img)


class StabilizerChain:
    """Base points and transversals certifying order and membership."""

    __slots__ = ("degree", "levels")

    def __init__(self, degree: int, levels: list[_Level]):
        self.degree = degree
        self.levels = levels

    @classmethod
    def build(cls, gen_tuples, degree: int) -> "StabilizerChain":
        identity = _identity(degree)
        levels: list[_Level] = []

        def first_moved(g):
            for i in range(degree):
                if g[i] != i + 1:
                    return i + 1
            return None

        def add_gen(g, start):
            # place g at every level from `start` down to the first level
            # whose base point g moves, appending a new level if needed
            j = start
            while True:
                if j == len(levels):
                    pt = first_moved(g)
                    if pt is None:
                        return
                    levels.append(_Level(pt, identity))
                levels[j].gens.append(g)
                if g[levels[j].base - 1] != levels[j].base:
                    return
                j += 1

        def sift(g, start):
            for lv in levels[start:]:
                entry = lv.transversal.get(g[lv.base - 1])
                if entry is None:
                    return g
                g = _mul(g, entry[1])
            return g

        seen = set()
        for g in gen_tuples:
            g = tuple(g)
            if g != identity and g not in seen:
                seen.add(g)
                add_gen(g, 0)

        # Bottom-up completion: a level is done once every Schreier generator
        # sifts to the identity through the (already complete) deeper levels.
        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            lv.rebuild(identity)
            residue = None
            for pt in list(lv.transversal):
                u = lv.transversal[pt][0]
                for s in lv.gens:
                    v_inv = lv.transversal[s[pt - 1]][1]
                    schreier = _mul(_mul(u, s), v_inv)
                    if schreier == identity:
                        continue
                    r = sift(schreier, i + 1)
                    if r != identity:
                        residue = r
                        break
                if residue is not None:
                    break
            if residue is None:
                i -= 1
            else:
                add_gen(residue, i + 1)
                i = len(levels) - 1
        return cls(degree, levels)

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def contains(self, g: tuple[int, ...]) -> bool:
        identity = _identity(self.degree)
        for lv in self.levels:
            entry = lv.transversal.get(g[lv.base - 1])
            if entry is None:
                return False
            g = _mul(g, entry[1])
        return g == identity

    def element_tuples(self) -> list[tuple[int, ...]]:
        elems = [_identity(self.degree)]
        for lv in reversed(self.levels):
            elems = [_mul(h, u) for h in elems for (u, _) in lv.transversal.values()]
        return elems


class Group:
    """A finite permutation group given by generators.

    Construction is deterministic in the generator order.  Instances are
    immutable; ``_cache`` holds derived data (element lists, class data,
    normalizers, ...) keyed by the computations that produced it.
    """

    def __init__(self, generators, degree: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        degrees = {g.degree for g in gens}
        if len(degrees) > 1:
            raise ValueError(f"generator degree mismatch: {sorted(degrees)}")
        if degree is None:
            if not degrees:
                raise ValueError("degree required for an empty generating set")
            degree = degrees.pop()
        elif degrees and degrees.pop() != degree:
            raise ValueError("generators do not match the stated degree")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(
            g for g in gens if not g.is_identity()
        )
        self.gen_tuples: tuple[tuple[int, ...], ...] = tuple(
            g.images for g in self.generators
        )
        self.chain = StabilizerChain.build(self.gen_tuples, degree)
        self.order: int = self.chain.order()
        self._cache: dict = {}

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, perm) -> bool:
        t = perm.images if isinstance(perm, Permutation) else tuple(perm)
        if len(t) != self.degree:
            return False
        return self.chain.contains(t)

    def element_tuples(self) -> tuple[tuple[int, ...], ...]:
        try:
            return self._cache["element_tuples"]
        except KeyError:
            elems = tuple(sorted(self.chain.element_tuples()))
            self._cache["element_tuples"] = elems
            return elems

    def elements(self) -> tuple[Permutation, ...]:
        try:
            return self._cache["elements"]
        except KeyError:
            elems = tuple(Permutation._raw(t) for t in self.element_tuples())
            self._cache["elements"] = elems
            return elems

    def element_set(self) -> frozenset[tuple[int, ...]]:
        try:
            return self._cache["element_set"]
        except KeyError:
            s = frozenset(self.element_tuples())
            self._cache["element_set"] = s
            return s

    def element_index(self) -> dict[tuple[int, ...], int]:
        try:
            return self._cache["element_index"]
        except KeyError:
            idx = {t: i for i, t in enumerate(self.element_tuples())}
            self._cache["element_index"] = idx
            return idx

    def exponent(self) -> int:
        try:
            return self._cache["exponent"]
        except KeyError:
            e = 1
            for t in self.element_tuples():
                e = lcm(e, _order(t))
            self._cache["exponent"] = e
            return e

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"<Group degree={self.degree} order={self.order}>"


class Subgroup(Group):
    """A group together with the ambient group it lives in.

    Every generator is checked for membership in the parent; the subgroup
    keeps its own stabilizer chain.
    """

    def __init__(self, parent: Group, generators, _known_elements=None):
        super().__init__(generators, degree=parent.degree)
        self.parent = parent
        for g in self.generators:
            if not parent.contains(g):
                raise ValueError(f"generator {g} is not an element of the parent group")
        if _known_elements is not None:
            elems = tuple(sorted(_known_elements))
            if len(elems) != self.order:
                raise ValueError("known element list does not match the group order")
            self._cache["element_tuples"] = elems

    def __repr__(self) -> str:
        return f"<Subgroup degree={self.degree} order={self.order} of order-{self.parent.order} group>"


def group_from_generators(gens, degree: int | None = None) -> Group:
    """Build a Group from a list of Permutations (or image tuples)."""
    return Group(gens, degree=degree)


def closure_element_tuples(gen_tuples, degree: int, cap: int | None = None):
    """Set of all products of the generators (the generated subgroup).

    Returns None as soon as the closure exceeds ``cap`` elements, which makes
    speculative joins cheap.
    """
    identity = _identity(degree)
    gens = [tuple(g) for g in gen_tuples if tuple(g) != identity]
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mul(x, g)
                if y not in elems:
                    elems.add(y)
                    if cap is not None and len(elems) > cap:
                        return None
                    nxt.append(y)
        frontier = nxt
    return elems


def reduce_generators(element_tuples, degree: int) -> tuple[tuple[int, ...], ...]:
    """A short generating sequence for the subgroup formed by the elements.

    Scans elements in sorted order and keeps those not yet generated; the
    result is deterministic and usually has O(log |H|) entries.
    """
    target = len(element_tuples)
    identity = _identity(degree)
    gens: list[tuple[int, ...]] = []
    chain = None
    for t in sorted(element_tuples):
        if t == identity:
            continue
        if chain is not None and chain.contains(t):
            continue
        gens.append(t)
        chain = StabilizerChain.build(gens, degree)
        if chain.order() == target:
            break
    return tuple(gens)


def subgroup_from_elements(parent: Group, element_tuples) -> Subgroup:
    """Subgroup of ``parent`` with exactly the given element set."""
    elems = set(element_tuples)
    gens = reduce_generators(elems, parent.degree)
    return Subgroup(parent, [Permutation._raw(g) for g in gens], _known_elements=elems)


def trivial_subgroup(parent: Group) -> Subgroup:
    return Subgroup(parent, [], _known_elements={_identity(parent.degree)})


def span_subgroup(parent: Group, gen_tuples, cap: int | None = None):
    """Subgroup generated by the tuples, or None if larger than ``cap``."""
    elems = closure_element_tuples(gen_tuples, parent.degree, cap=cap)
    if elems is None:
        return None
    return subgroup_from_elements(parent, elems)


class ClassData:
    """Conjugacy classes: representatives, sizes, and representative orders.

    Classes are sorted by (representative order, size, minimal element), so
    the identity class always comes first.
    """

    def __init__(self, group: Group, class_lists: list[list[tuple[int, ...]]]):
        decorated = []
        for elems in class_lists:
            rep = min(elems)
            decorated.append((_order(rep), len(elems), rep, elems))
        decorated.sort(key=lambda t: (t[0], t[1], t[2]))
        self.group = group
        self.representatives: tuple[Permutation, ...] = tuple(
            Permutation._raw(t[2]) for t in decorated
        )
        self.sizes: tuple[int, ...] = tuple(t[1] for t in decorated)
        self.rep_orders: tuple[int, ...] = tuple(t[0] for t in decorated)
        self._elements: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
            tuple(sorted(t[3])) for t in decorated
        )
        self._class_of: dict[tuple[int, ...], int] = {}
        for idx, elems in enumerate(self._elements):
            for t in elems:
                self._class_of[t] = idx

    def __len__(self) -> int:
        return len(self.representatives)

    def class_of(self, perm) -> int:
        """Index of the class containing the element."""
        t = perm.images if isinstance(perm, Permutation) else tuple(perm)
        try:
            return self._class_of[t]
        except KeyError:
            raise ValueError("element does not belong to the group") from None

    def class_elements(self, index: int) -> tuple[tuple[int, ...], ...]:
        return self._elements[index]

    def inverse_class(self, index: int) -> int:
        return self._class_of[_inv(self.representatives[index].images)]

    def centralizer_order(self, index: int) -> int:
        return self.group.order // self.sizes[index]


def _check_bound(G: Group, max_order: int) -> None:
    if G.order > max_order:
        raise EnumerationBoundError(
            f"group order {G.order} exceeds the enumeration bound {max_order}"
        )


def conjugacy_classes(G: Group, max_order: int = DEFAULT_ENUMERATION_BOUND) -> ClassData:
    """Conjugacy classes by orbit computation under generator conjugation."""
    try:
        return G._cache["classes"]
    except KeyError:
        pass
    _check_bound(G, max_order)
    gens = G.gen_tuples
    assigned: set[tuple[int, ...]] = set()
    class_lists: list[list[tuple[int, ...]]] = []
    for t in G.element_tuples():
        if t in assigned:
            continue
        orbit = {t}
        queue = [t]
        while queue:
            x = queue.pop()
            for g in gens:
                y = _conj(x, g)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        assigned |= orbit
        class_lists.append(sorted(orbit))
    data = ClassData(G, class_lists)
    G._cache["classes"] = data
    return data


def _require_subgroup(G: Group, H: Group) -> None:
    if H.degree != G.degree:
        raise ValueError("subgroup degree does not match the group degree")
    for g in H.gen_tuples:
        if not G.chain.contains(g):
            raise ValueError("H is not contained in G")


def normalizer(
    G: Group, H: Group, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> Subgroup:
    """N_G(H), by scanning all elements of G."""
    _require_subgroup(G, H)
    key = ("normalizer", H.element_set())
    try:
        return G._cache[key]
    except KeyError:
        pass
    _check_bound(G, max_order)
    h_set = H.element_set()
    h_gens = H.gen_tuples
    members = [
        t
        for t in G.element_tuples()
        if all(_conj(h, t) in h_set for h in h_gens)
    ]
    N = subgroup_from_elements(G, members)
    G._cache[key] = N
    return N


def normalizer_index_set(
    G: Group, H: Group, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> frozenset[int]:
    """Indices (into G.element_tuples()) of the elements of N_G(H)."""
    key = ("normalizer_idx", H.element_set())
    try:
        return G._cache[key]
    except KeyError:
        pass
    N = normalizer(G, H, max_order=max_order)
    idx = G.element_index()
    s = frozenset(idx[t] for t in N.element_tuples())
    G._cache[key] = s
    return s


def centralizer_order(
    G: Group, g: Permutation, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> int:
    """|C_G(g)| by direct counting."""
    t = g.images if isinstance(g, Permutation) else tuple(g)
    if not G.chain.contains(t):
        raise ValueError("g is not an element of G")
    _check_bound(G, max_order)
    return sum(1 for x in G.element_tuples() if _mul(x, t) == _mul(t, x))


class CosetAction:
    """The action of G on the right cosets of a normal subgroup N.

    ``quotient`` is the image permutation group (isomorphic to G/N since N is
    normal and hence the kernel of the action); ``project`` maps elements of
    G onto it.  Coset number i corresponds to point i + 1 and cosets are
    ordered by their minimal element, which places the identity coset first.
    """

    def __init__(self, group: Group, kernel: Subgroup):
        self.group = group
        self.kernel = kernel
        n_tuples = kernel.element_tuples()
        coset_of: dict[tuple[int, ...], int] = {}
        reps: list[tuple[int, ...]] = []
        for t in group.element_tuples():
            if t in coset_of:
                continue
            i = len(reps)
            reps.append(t)
            for n in n_tuples:
                coset_of[_mul(n, t)] = i
        if len(coset_of) != group.order:
            raise ValueError("N is not a subgroup of G")
        self._coset_of = coset_of
        self._reps = reps
        self.index = len(reps)
        gens = [self._project_tuple(g) for g in group.gen_tuples]
        self.quotient = Group([Permutation._raw(g) for g in gens], degree=self.index)
        if self.quotient.order * kernel.order != group.order:
            raise ValueError("N is not normal in G")

    def _project_tuple(self, t: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self._coset_of[_mul(rep, t)] + 1 for rep in self._reps)

    def project(self, perm) -> Permutation:
        t = perm.images if isinstance(perm, Permutation) else tuple(perm)
        if t not in self._coset_of:
            raise ValueError("element does not belong to the group")
        return Permutation._raw(self._project_tuple(t))

    def section(self, point: int) -> Permutation:
        """A coset representative mapping to the coset numbered ``point``."""
        return Permutation._raw(self._reps[point - 1])

    def project_subgroup(self, H: Subgroup) -> Subgroup:
        images = {self._project_tuple(t) for t in H.element_tuples()}
        return subgroup_from_elements(self.quotient, images)

    def preimage_subgroup(self, S: Group) -> Subgroup:
        s_set = S.element_set()
        members = [
            t for t in self.group.element_tuples() if self._project_tuple(t) in s_set
        ]
        return subgroup_from_elements(self.group, members)


def coset_action(
    G: Group, N: Subgroup, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> CosetAction:
    """Permutation action of G on the cosets of a normal subgroup N."""
    _require_subgroup(G, N)
    key = ("coset_action", N.element_set())
    try:
        return G._cache[key]
    except KeyError:
        pass
    _check_bound(G, max_order)
    n_set = N.element_set()
    for g in G.gen_tuples:
        for n in N.gen_tuples:
            if _conj(n, g) not in n_set:
                raise ValueError("N is not normal in G")
    action = CosetAction(G, N)
    G._cache[key] = action
    return action
