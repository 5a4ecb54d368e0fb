"""Chains of pi-subgroups: enumeration up to conjugacy with stabilizers,
plus the sign-reversing involution and the pushforward along a quotient by
a normal pi'-subgroup.

A chain is a strictly increasing sequence 1 = P_0 < P_1 < ... < P_n of
pi-subgroups; its length is n and the trivial chain (n = 0) is allowed.
The stabilizer of a chain is the intersection of the normalizers of its
members.

Chain orbits are enumerated by extension: two one-step extensions of a chain
C are conjugate iff the added subgroups are conjugate under the stabilizer
of C, because any element mapping one extended chain to the other must fix
every member of C.  Stabilizers shrink along the way by intersecting with
one more normalizer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    Group,
    Subgroup,
    normalizer_index_set,
    reduce_generators,
    span_subgroup,
    subgroup_from_elements,
)
from .perms import Permutation, _conj, _identity
from .primes import PrimeSet, is_pi_number, is_pi_prime_number, pi_part
from .pi_subgroups import SubgroupSet, enumerate_pi_subgroups
from .structure import o_pi

__all__ = [
    "Chain",
    "ChainOrbit",
    "enumerate_chain_orbits",
    "enumerate_all_chains",
    "chain_stabilizer",
    "funct_involution",
    "push_chain_mod_k",
]


class Chain:
    """A strictly increasing sequence of pi-subgroups starting at the
    trivial group; ``length`` is the number of nontrivial members."""

    __slots__ = ("group", "pi", "members", "_fingerprints")

    def __init__(self, group: Group, pi: PrimeSet, members, validate: bool = True):
        self.group = group
        self.pi = pi
        self.members: tuple[Subgroup, ...] = tuple(members)
        self._fingerprints = tuple(m.element_set() for m in self.members)
        if validate:
            self._validate()

    def _validate(self) -> None:
        if not self.members:
            raise ValueError("a chain has at least the trivial member")
        if self.members[0].order != 1:
            raise ValueError("a chain starts at the trivial subgroup")
        for m in self.members:
            if not is_pi_number(m.order, self.pi):
                raise ValueError(f"member of order {m.order} is not a pi-group")
        for a, b in zip(self._fingerprints, self._fingerprints[1:]):
            if not (a < b):
                raise ValueError("chain members must strictly increase")

    @property
    def length(self) -> int:
        return len(self.members) - 1

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def last(self) -> Subgroup:
        return self.members[-1]

    def order_profile(self) -> tuple[int, ...]:
        return tuple(m.order for m in self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.group is other.group
            and self._fingerprints == other._fingerprints
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self._fingerprints))

    def __repr__(self) -> str:
        return "Chain(" + " < ".join(str(o) for o in self.order_profile()) + ")"


@dataclass(frozen=True)
class ChainOrbit:
    """A conjugacy orbit of chains: representative, orbit size, stabilizer."""

    representative: Chain
    orbit_size: int
    stabilizer: Subgroup


def _member_tables(G: Group, ss: SubgroupSet):
    """Per-SubgroupSet lookups used by the enumerations: fingerprints,
    element-index sets, strict-superset lists, and normalizer index sets."""
    try:
        return ss._cache["tables"]
    except KeyError:
        pass
    members = ss.members
    fps = [m.element_set() for m in members]
    idx = G.element_index()
    idx_sets = [frozenset(idx[t] for t in fp) for fp in fps]
    order_groups: dict[int, list[int]] = {}
    for i, m in enumerate(members):
        order_groups.setdefault(m.order, []).append(i)
    above: list[list[int]] = [[] for _ in members]
    for i, m in enumerate(members):
        for o, group_ids in order_groups.items():
            if o <= m.order or o % m.order:
                continue
            for j in group_ids:
                if fps[i] < fps[j]:
                    above[i].append(j)
    for lst in above:
        lst.sort()
    norm_sets = [normalizer_index_set(G, m) for m in members]
    tables = (fps, idx_sets, above, norm_sets)
    ss._cache["tables"] = tables
    return tables


def _set_generators(G: Group, index_set: frozenset[int]) -> tuple[tuple[int, ...], ...]:
    """Reduced generator tuples for the subgroup formed by element indices."""
    cache = G._cache.setdefault("set_gens", {})
    try:
        return cache[index_set]
    except KeyError:
        elems = G.element_tuples()
        gens = reduce_generators([elems[i] for i in index_set], G.degree)
        cache[index_set] = gens
        return gens


def _set_subgroup(G: Group, index_set: frozenset[int]) -> Subgroup:
    cache = G._cache.setdefault("set_subgroups", {})
    try:
        return cache[index_set]
    except KeyError:
        elems = G.element_tuples()
        sub = subgroup_from_elements(G, [elems[i] for i in index_set])
        cache[index_set] = sub
        return sub


def enumerate_chain_orbits(
    G: Group,
    pi: PrimeSet,
    normal_only: bool = False,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> tuple[ChainOrbit, ...]:
    """One representative chain per conjugacy orbit, with stabilizers.

    With ``normal_only`` the enumeration is restricted to chains whose
    members are all normal in the last member.
    """
    key = ("chain_orbits", pi, normal_only)
    try:
        return G._cache[key]
    except KeyError:
        pass
    ss = enumerate_pi_subgroups(G, pi, max_order=max_order)
    fps, idx_sets, above, norm_sets = _member_tables(G, ss)
    full_set = frozenset(range(G.order))

    conj_cache: dict[tuple[int, tuple[int, ...]], int] = {}

    def conj_member(i: int, g: tuple[int, ...]) -> int:
        key2 = (i, g)
        try:
            return conj_cache[key2]
        except KeyError:
            image = frozenset(_conj(t, g) for t in fps[i])
            j = ss.index_of(image)
            conj_cache[key2] = j
            return j

    orbits: list[ChainOrbit] = []

    def emit(chain_ids: tuple[int, ...], stab_set: frozenset[int]) -> None:
        rep = Chain(
            G, pi, [ss.members[i] for i in chain_ids], validate=False
        )
        orbits.append(
            ChainOrbit(
                representative=rep,
                orbit_size=G.order // len(stab_set),
                stabilizer=_set_subgroup(G, stab_set),
            )
        )

    def extend(chain_ids: tuple[int, ...], stab_set: frozenset[int]) -> None:
        emit(chain_ids, stab_set)
        last = chain_ids[-1]
        candidates = above[last]
        if normal_only:
            candidates = [
                j
                for j in candidates
                if all(idx_sets[j] <= norm_sets[m] for m in chain_ids[1:])
                and idx_sets[j] <= norm_sets[last]
            ]
        if not candidates:
            return
        stab_gens = _set_generators(G, stab_set)
        remaining = set(candidates)
        for j in candidates:
            if j not in remaining:
                continue
            orbit = {j}
            frontier = [j]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in stab_gens:
                        y = conj_member(x, g)
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            remaining -= orbit
            extend(chain_ids + (j,), stab_set & norm_sets[j])

    extend((0,), full_set)
    orbits.sort(
        key=lambda o: (o.representative.length, o.representative.order_profile())
    )
    result = tuple(orbits)
    G._cache[key] = result
    return result


def enumerate_all_chains(
    G: Group,
    pi: PrimeSet,
    normal_only: bool = False,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> tuple[Chain, ...]:
    """Every chain, not just orbit representatives.

    Used for exhaustive property checks and as the cross-check for the
    orbit-wise enumeration (the orbit sizes must add up to this count).
    """
    ss = enumerate_pi_subgroups(G, pi, max_order=max_order)
    fps, idx_sets, above, norm_sets = _member_tables(G, ss)
    chains: list[tuple[int, ...]] = []

    def extend(chain_ids: tuple[int, ...]) -> None:
        chains.append(chain_ids)
        last = chain_ids[-1]
        for j in above[last]:
            if normal_only and not (
                idx_sets[j] <= norm_sets[last]
                and all(idx_sets[j] <= norm_sets[m] for m in chain_ids[1:])
            ):
                continue
            extend(chain_ids + (j,))

    extend((0,))
    return tuple(
        Chain(G, pi, [ss.members[i] for i in ids], validate=False) for ids in chains
    )


def chain_stabilizer(G: Group, C: Chain) -> Subgroup:
    """Intersection of the normalizers of all chain members."""
    stab = frozenset(range(G.order))
    for m in C.members:
        stab &= normalizer_index_set(G, m)
    return _set_subgroup(G, stab)


def _pi_join(G: Group, pi: PrimeSet, N: Subgroup, P: Subgroup) -> Subgroup:
    """The product subgroup N*P for N normal; cached per chain member."""
    cache = G._cache.setdefault(("pi_join", pi, N.element_set()), {})
    fp = P.element_set()
    try:
        return cache[fp]
    except KeyError:
        joined = span_subgroup(G, N.gen_tuples + P.gen_tuples, cap=G.order)
        cache[fp] = joined
        return joined


def funct_involution(G: Group, C: Chain) -> Chain:
    """The sign-reversing pairing on chains available when the pi-core N of
    G is nontrivial: append N*P_n if N is not inside the last member;
    otherwise, with k minimal such that N <= P_k, delete P_k when
    P_{k-1}*N = P_k and insert P_{k-1}*N below it when not.

    The result has length |C| +- 1, applying the map twice restores C, and
    the stabilizer is unchanged.
    """
    N = o_pi(G, C.pi)
    if N.order == 1:
        raise ValueError("the pi-core of G is trivial; the pairing is undefined")
    n_fp = N.element_set()
    last_fp = C.members[-1].element_set()
    if not n_fp <= last_fp:
        top = _pi_join(G, C.pi, N, C.members[-1])
        return Chain(G, C.pi, C.members + (top,))
    k = next(i for i, m in enumerate(C.members) if n_fp <= m.element_set())
    joined = _pi_join(G, C.pi, N, C.members[k - 1])
    if joined.element_set() == C.members[k].element_set():
        return Chain(G, C.pi, C.members[:k] + C.members[k + 1 :])
    return Chain(G, C.pi, C.members[:k] + (joined,) + C.members[k:])


def push_chain_mod_k(G: Group, K: Subgroup, C: Chain, action=None) -> Chain:
    """Image of a chain in the quotient by a normal pi'-subgroup K.

    Member orders are preserved (each member meets K trivially), so
    strictness survives the projection.  The chain returned lives in
    ``coset_action(G, K).quotient``; the ambient quotient group is reachable
    through the members' ``parent``.
    """
    from .groups import coset_action

    if not is_pi_prime_number(K.order, C.pi):
        raise ValueError("K is not a pi'-group")
    if action is None:
        action = coset_action(G, K)
    images = [action.project_subgroup(m) for m in C.members]
    for m, im in zip(C.members, images):
        if im.order != m.order:
            raise AssertionError("projection changed a member order; this is a bug")
    return Chain(action.quotient, C.pi, images)
