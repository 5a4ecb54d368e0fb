"""Normal structure relative to a set of primes pi: normal closures, the
largest normal pi- and pi'-subgroups, and the pi-separability test."""

from __future__ import annotations

from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    Group,
    Subgroup,
    conjugacy_classes,
    coset_action,
    subgroup_from_elements,
    trivial_subgroup,
)
from .perms import Permutation, _conj, _identity
from .primes import PrimeSet, is_pi_number, is_pi_prime_number

__all__ = [
    "PrimeSet",
    "normal_closure",
    "o_pi",
    "o_pi_prime",
    "is_pi_separable",
]


def normal_closure(G: Group, g) -> Subgroup:
    """Smallest normal subgroup of G containing g."""
    t = g.images if isinstance(g, Permutation) else tuple(g)
    if not G.chain.contains(t):
        raise ValueError("g is not an element of G")
    key = ("normal_closure", t)
    try:
        return G._cache[key]
    except KeyError:
        pass
    identity = _identity(G.degree)
    gens: list[tuple[int, ...]] = [] if t == identity else [t]
    sub = subgroup_from_elements(G, closure_of(gens, G))
    # close the generating set under conjugation by the generators of G
    changed = True
    while changed:
        changed = False
        for s in list(gens):
            for x in G.gen_tuples:
                c = _conj(s, x)
                if not sub.chain.contains(c):
                    gens.append(c)
                    sub = subgroup_from_elements(G, closure_of(gens, G))
                    changed = True
    G._cache[key] = sub
    return sub


def closure_of(gen_tuples, G: Group) -> set[tuple[int, ...]]:
    from .groups import closure_element_tuples

    return closure_element_tuples(gen_tuples, G.degree, cap=G.order)


def _core(G: Group, keep, cache_key) -> Subgroup:
    """Subgroup generated by all normal closures of class representatives
    whose order passes ``keep``.  An element lies in the core iff its normal
    closure does, so this reaches the whole core."""
    try:
        return G._cache[cache_key]
    except KeyError:
        pass
    gens: list[tuple[int, ...]] = []
    for rep in conjugacy_classes(G).representatives:
        closure = normal_closure(G, rep)
        if keep(closure.order):
            gens.extend(closure.gen_tuples)
    result = subgroup_from_elements(G, closure_of(gens, G))
    if not keep(result.order):
        raise AssertionError("core has the wrong order; this is a bug")
    G._cache[cache_key] = result
    return result


def o_pi(G: Group, pi: PrimeSet) -> Subgroup:
    """The largest normal subgroup whose order is a pi-number."""
    return _core(G, lambda n: is_pi_number(n, pi), ("o_pi", pi))


def o_pi_prime(G: Group, pi: PrimeSet) -> Subgroup:
    """The largest normal subgroup whose order is coprime to every p in pi."""
    return _core(G, lambda n: is_pi_prime_number(n, pi), ("o_pi_prime", pi))


def is_pi_separable(
    G: Group, pi: PrimeSet, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> bool:
    """Whether the ascending series of alternating pi'- and pi-cores reaches G.

    Computed by repeatedly factoring out the pi'-core and then the pi-core
    via the coset action; the series reaches G iff every composition factor
    is a pi-group or a pi'-group.
    """
    key = ("separable", pi)
    try:
        return G._cache[key]
    except KeyError:
        pass
    H = G
    result = None
    while result is None:
        if H.order == 1:
            result = True
            break
        K = o_pi_prime(H, pi)
        if K.order > 1:
            H = coset_action(H, K, max_order=max_order).quotient
            continue
        M = o_pi(H, pi)
        if M.order > 1:
            H = coset_action(H, M, max_order=max_order).quotient
            continue
        result = False
    G._cache[key] = result
    return result
