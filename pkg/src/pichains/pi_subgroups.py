"""Enumeration of all subgroups of pi-number order.

These subgroups are the vertices from which chains are built.  The
enumeration closes the set of cyclic pi-subgroups under joins: any
pi-subgroup is reached by repeatedly joining with one more cyclic
pi-subgroup, because every partial join sits inside it and is therefore
itself a pi-group.

The fixpoint runs over one representative per conjugacy orbit (joins
conjugate well, so this loses nothing) and each discovered subgroup is then
expanded to its full orbit.  Join candidates are reduced modulo conjugacy
under the normalizer of the representative, which prunes most of the work.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    Group,
    Subgroup,
    _check_bound,
    closure_element_tuples,
    normalizer,
    subgroup_from_elements,
)
from .perms import _conj, _identity, _order
from .primes import PrimeSet, is_pi_number, pi_part

__all__ = ["SubgroupSet", "enumerate_pi_subgroups", "pi_part"]

Fingerprint = frozenset


@dataclass
class SubgroupSet:
    """All pi-subgroups of a group, with their partition into conjugacy orbits.

    ``members`` is sorted canonically by (order, element list); orbit entries
    are index tuples into it.  The trivial subgroup is always member 0.
    """

    group: Group
    pi: PrimeSet
    members: tuple[Subgroup, ...]
    conjugacy_orbits: tuple[tuple[int, ...], ...]
    _cache: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def index_of(self, element_set: frozenset) -> int:
        try:
            lookup = self._cache["fp_index"]
        except KeyError:
            lookup = {m.element_set(): i for i, m in enumerate(self.members)}
            self._cache["fp_index"] = lookup
        return lookup[element_set]

    def orbit_of(self, index: int) -> int:
        try:
            lookup = self._cache["orbit_index"]
        except KeyError:
            lookup = {}
            for oi, orbit in enumerate(self.conjugacy_orbits):
                for mi in orbit:
                    lookup[mi] = oi
            self._cache["orbit_index"] = lookup
        return lookup[index]


def _conj_set(elems: frozenset, g: tuple[int, ...]) -> frozenset:
    return frozenset(_conj(t, g) for t in elems)


def enumerate_pi_subgroups(
    G: Group, pi: PrimeSet, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> SubgroupSet:
    key = ("pi_subgroups", pi)
    try:
        return G._cache[key]
    except KeyError:
        pass
    _check_bound(G, max_order)

    cap = pi_part(G.order, pi)
    identity = _identity(G.degree)
    trivial_fp = frozenset([identity])

    # all cyclic pi-subgroups, keyed by element set
    cyclics: dict[Fingerprint, tuple[tuple[int, ...], ...]] = {}
    for t in G.element_tuples():
        if t == identity or not is_pi_number(_order(t), pi):
            continue
        powers = [t]
        x = t
        while True:
            x = tuple(t[j - 1] for j in x)
            if x == identity:
                break
            powers.append(x)
        fp = frozenset(powers) | trivial_fp
        cyclics.setdefault(fp, (t,))
    cyclic_items = sorted(cyclics.items(), key=lambda kv: sorted(kv[0]))
    cyclic_fps = [fp for fp, _ in cyclic_items]
    cyclic_gens = {fp: gens for fp, gens in cyclic_items}

    seen: set[Fingerprint] = set()
    orbits: list[list[Fingerprint]] = []
    rep_gens: dict[Fingerprint, tuple[tuple[int, ...], ...]] = {}
    queue: list[Fingerprint] = []

    def admit(fp: Fingerprint, gens) -> None:
        """Record a new subgroup, expand its conjugacy orbit, queue its rep."""
        if fp in seen:
            return
        orbit = {fp}
        frontier = [fp]
        while frontier:
            nxt = []
            for s in frontier:
                for g in G.gen_tuples:
                    c = _conj_set(s, g)
                    if c not in orbit:
                        orbit.add(c)
                        nxt.append(c)
            frontier = nxt
        seen.update(orbit)
        orbits.append(sorted(orbit, key=sorted))
        rep_gens[fp] = tuple(gens)
        queue.append(fp)

    admit(trivial_fp, ())
    for fp in cyclic_fps:
        admit(fp, cyclic_gens[fp])

    conj_member: dict[tuple[Fingerprint, tuple[int, ...]], Fingerprint] = {}

    def conj_cyclic(fp: Fingerprint, g: tuple[int, ...]) -> Fingerprint:
        key2 = (fp, g)
        try:
            return conj_member[key2]
        except KeyError:
            c = _conj_set(fp, g)
            conj_member[key2] = c
            return c

    pos = 0
    while pos < len(queue):
        rep = queue[pos]
        pos += 1
        gens = rep_gens[rep]
        norm_gens = normalizer(
            G, subgroup_from_elements(G, rep), max_order=max_order
        ).gen_tuples
        # candidate cyclics up to conjugacy under the normalizer of rep
        remaining = set(cyclic_fps)
        candidates = []
        for fp in cyclic_fps:
            if fp not in remaining:
                continue
            orbit = {fp}
            frontier = [fp]
            while frontier:
                nxt = []
                for s in frontier:
                    for g in norm_gens:
                        c = conj_cyclic(s, g)
                        if c not in orbit:
                            orbit.add(c)
                            nxt.append(c)
                frontier = nxt
            remaining -= orbit
            candidates.append(fp)
        for cand in candidates:
            if cand <= rep:
                continue
            joined = closure_element_tuples(
                gens + cyclic_gens[cand], G.degree, cap=cap
            )
            if joined is None:
                continue
            if not is_pi_number(len(joined), pi):
                continue
            fp = frozenset(joined)
            if fp not in seen:
                admit(fp, reduce_join_gens(gens, cyclic_gens[cand]))

    # materialize members, sorted canonically
    all_fps = sorted(seen, key=lambda fp: (len(fp), sorted(fp)))
    members = tuple(subgroup_from_elements(G, fp) for fp in all_fps)
    fp_index = {fp: i for i, fp in enumerate(all_fps)}
    orbit_tuples = tuple(
        sorted(tuple(sorted(fp_index[fp] for fp in orbit)) for orbit in orbits)
    )
    result = SubgroupSet(
        group=G, pi=pi, members=members, conjugacy_orbits=orbit_tuples
    )
    result._cache["fp_index"] = {m.element_set(): i for i, m in enumerate(members)}
    G._cache[key] = result
    return result


def reduce_join_gens(gens_a, gens_b) -> tuple[tuple[int, ...], ...]:
    out = list(gens_a)
    for g in gens_b:
        if g not in out:
            out.append(g)
    return tuple(out)
