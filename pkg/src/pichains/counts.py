"""Counting statistics on a finite group relative to a prime set pi:
class counts, pi'-class counts, defect counts k_d, and the relative count
k_d(G | theta) over a character of a normal subgroup."""

from __future__ import annotations

from dataclasses import dataclass

from .char_table import (
    CharTableModP,
    character_degrees,
    character_table_mod_p,
    class_fusion,
    dixon_prime,
    restriction_multiplicity,
)
from .groups import Group, Subgroup, conjugacy_classes, subgroup_from_elements
from .perms import _conj
from .primes import PrimeSet, is_pi_number, is_pi_prime_number, pi_part

__all__ = [
    "DefectProfile",
    "defect_profile",
    "k_d",
    "k_count",
    "l_count",
    "k_d_over",
    "theta_stabilizer",
    "conjugate_character_index",
]


def k_count(G: Group) -> int:
    """Number of conjugacy classes."""
    return len(conjugacy_classes(G))


def l_count(G: Group, pi: PrimeSet) -> int:
    """Number of conjugacy classes of pi'-elements."""
    classes = conjugacy_classes(G)
    return sum(1 for o in classes.rep_orders if is_pi_prime_number(o, pi))


def k_d(G: Group, pi: PrimeSet, d: int) -> int:
    """Number of irreducible characters whose degree satisfies
    |G|_pi = d * degree_pi.  Zero whenever d is not a pi-number."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if pi_part(d, pi) != d:
        return 0
    whole = pi_part(G.order, pi)
    return sum(1 for deg in character_degrees(G) if whole == d * pi_part(deg, pi))


@dataclass(frozen=True)
class DefectProfile:
    """k_d for every pi-number divisor d of |G|_pi, in one sweep."""

    group_order_pi_part: int
    counts: dict[int, int]


def defect_profile(G: Group, pi: PrimeSet) -> DefectProfile:
    whole = pi_part(G.order, pi)
    counts: dict[int, int] = {}
    for d in sorted(n for n in range(1, whole + 1) if whole % n == 0):
        if is_pi_number(d, pi):
            counts[d] = k_d(G, pi, d)
    return DefectProfile(group_order_pi_part=whole, counts=counts)


def _require_normal(G: Group, N: Subgroup) -> None:
    n_set = N.element_set()
    for g in G.gen_tuples:
        for n in N.gen_tuples:
            if _conj(n, g) not in n_set:
                raise ValueError("N is not normal in G")


def _conjugated_row(tableN: CharTableModP, theta_index: int, g: tuple[int, ...]):
    """Value row of x -> theta(g x g^-1): entry j is theta at the class of
    g * rep_j * g^-1, i.e. the conjugate of rep_j by g^-1."""
    from .perms import _inv

    g_inv = _inv(g)
    classes = tableN.classes
    class_of = classes._class_of
    row = tableN.values[theta_index]
    return tuple(
        row[class_of[_conj(rep.images, g_inv)]] for rep in classes.representatives
    )


def conjugate_character_index(
    tableN: CharTableModP, theta_index: int, g: tuple[int, ...]
) -> int:
    """Index of the character x -> theta(g x g^-1) in the table of N.

    Conjugation permutes the classes of N; composing a character row with
    that permutation is another row of the table.
    """
    return tableN.values.index(_conjugated_row(tableN, theta_index, g))


def theta_stabilizer(
    G: Group, N: Subgroup, tableN: CharTableModP, theta_index: int
) -> Subgroup:
    """Stabilizer of a character of a normal subgroup under the conjugation
    action of G on the characters of N."""
    _require_normal(G, N)
    row = tableN.values[theta_index]
    members = []
    for t in G.element_tuples():
        if _conjugated_row(tableN, theta_index, t) == row:
            members.append(t)
    return subgroup_from_elements(G, members)


def k_d_over(
    G: Group,
    N: Subgroup,
    theta_index: int,
    pi: PrimeSet,
    d: int,
    prime: int | None = None,
) -> int:
    """Number of irreducible characters of G lying over theta (a character
    of the normal subgroup N, given by its row index in the table of N at
    the shared prime) that satisfy |G|_pi = d * degree_pi."""
    if d < 1:
        raise ValueError("d must be >= 1")
    _require_normal(G, N)
    if pi_part(d, pi) != d:
        return 0
    p = prime if prime is not None else dixon_prime(G)
    tableG = character_table_mod_p(G, prime=p)
    tableN = character_table_mod_p(N, prime=p)
    if not 0 <= theta_index < len(tableN):
        raise ValueError("theta index out of range")
    fusion = class_fusion(tableG, tableN)
    whole = pi_part(G.order, pi)
    count = 0
    for i, deg in enumerate(tableG.degrees):
        if whole != d * pi_part(deg, pi):
            continue
        if restriction_multiplicity(tableG, i, tableN, theta_index, fusion) > 0:
            count += 1
    return count
