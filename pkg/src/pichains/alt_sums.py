"""Exact evaluation of the alternating sums over chains of pi-subgroups,
with per-orbit diagnostics.

Every sum runs over one representative per conjugacy orbit of chains.  For a
conjugation-invariant statistic f, summing sign * |G_C| * f(G_C) over all
chains equals summing orbit_size * sign * |G_C| * f(G_C) over orbit
representatives, and with weight orbit_size * |G_C| = |G| the normalized
sums collapse to one integer summand per orbit.  All arithmetic is exact:
integers, with fractions only as carriers that must cancel.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .chains import Chain, enumerate_all_chains, enumerate_chain_orbits, chain_stabilizer
from .char_table import (
    character_table_mod_p,
    dixon_prime,
    induced_trivial_values,
)
from .counts import k_count, k_d, k_d_over, l_count, theta_stabilizer
from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    Group,
    Subgroup,
    conjugacy_classes,
    span_subgroup,
)
from .primes import PrimeSet, is_pi_prime_number, pi_part
from .structure import is_pi_separable, o_pi

__all__ = [
    "OrbitTerm",
    "ChainSumReport",
    "theorem_a_sum",
    "theorem_main_sum",
    "mu_pi",
    "corollary_b_check",
    "webb_values",
    "webb_report",
]

VERIFIED = "VERIFIED"
FAILED = "FAILED"
COUNTEREXAMPLE_CONTEXT = "COUNTEREXAMPLE-CONTEXT"
NON_SEPARABLE = "NON-SEPARABLE"


@dataclass(frozen=True)
class OrbitTerm:
    """One chain orbit's contribution to an alternating sum."""

    length: int
    sign: int
    stabilizer_order: int
    orbit_size: int
    stat: object
    contribution: object


@dataclass(frozen=True)
class ChainSumReport:
    """An evaluated alternating sum with per-orbit contributions."""

    group: str
    pi: PrimeSet
    parameter: str
    hypothesis_flags: dict
    orbits: tuple[OrbitTerm, ...]
    total: object
    verdict: str
    class_info: tuple = field(default=())

    def to_json_dict(self) -> dict:
        def encode(x):
            if isinstance(x, bool):
                return x
            if isinstance(x, int):
                return str(x)
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, (list, tuple)):
                return [encode(v) for v in x]
            return x

        return {
            "group": self.group,
            "pi": str(self.pi),
            "parameter": self.parameter,
            "hypothesis_flags": {k: bool(v) for k, v in self.hypothesis_flags.items()},
            "orbits": [
                {
                    "length": str(t.length),
                    "sign": str(t.sign),
                    "stabilizer_order": str(t.stabilizer_order),
                    "orbit_size": str(t.orbit_size),
                    "stat": encode(t.stat),
                    "contribution": encode(t.contribution),
                }
                for t in self.orbits
            ],
            "total": encode(self.total),
            "verdict": self.verdict,
            "class_info": [
                {"order": str(o), "size": str(s), "pi_singular": b}
                for (o, s, b) in self.class_info
            ],
        }


def _label(G: Group, label: str | None) -> str:
    return label if label is not None else repr(G)


def _map_orbits(orbits, fn, threads: int):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, orbits))
    return [fn(o) for o in orbits]


def theorem_a_sum(
    G: Group,
    pi: PrimeSet,
    d: int,
    normal_only: bool = False,
    label: str | None = None,
    threads: int = 1,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> ChainSumReport:
    """The alternating sum of |G_C| * k_d(G_C) over chains of pi-subgroups.

    The vanishing claim applies for pi-separable G, d > 1 and unrestricted
    chains; outside that hypothesis the sum is still computed and reported,
    flagged as counterexample context rather than as a failure.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    orbits = enumerate_chain_orbits(G, pi, normal_only=normal_only, max_order=max_order)

    def term(orbit):
        stat = k_d(orbit.stabilizer, pi, d)
        chain = orbit.representative
        contribution = chain.sign * orbit.orbit_size * orbit.stabilizer.order * stat
        return OrbitTerm(
            length=chain.length,
            sign=chain.sign,
            stabilizer_order=orbit.stabilizer.order,
            orbit_size=orbit.orbit_size,
            stat=stat,
            contribution=contribution,
        )

    terms = _map_orbits(orbits, term, threads)
    total = sum(t.contribution for t in terms)
    separable = is_pi_separable(G, pi, max_order=max_order)
    flags = {
        "pi_separable": separable,
        "o_pi_nontrivial": o_pi(G, pi).order > 1,
        "claim_applies": separable and d > 1 and not normal_only,
    }
    if flags["claim_applies"]:
        verdict = VERIFIED if total == 0 else FAILED
    else:
        verdict = COUNTEREXAMPLE_CONTEXT
    return ChainSumReport(
        group=_label(G, label),
        pi=pi,
        parameter=f"d={d}" + (" normal-only" if normal_only else ""),
        hypothesis_flags=flags,
        orbits=tuple(terms),
        total=total,
        verdict=verdict,
    )


def _gc_join(G: Group, N: Subgroup, stab: Subgroup) -> Subgroup:
    cache = G._cache.setdefault(("gc_join", N.element_set()), {})
    fp = stab.element_set()
    try:
        return cache[fp]
    except KeyError:
        joined = span_subgroup(G, stab.gen_tuples + N.gen_tuples, cap=G.order)
        cache[fp] = joined
        return joined


def theorem_main_sum(
    G: Group,
    N: Subgroup,
    theta_index: int,
    pi: PrimeSet,
    d: int,
    label: str | None = None,
    threads: int = 1,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> ChainSumReport:
    """The relative alternating sum of |G_C| * k_d(G_C N | theta) for a
    normal pi'-subgroup N and a character theta of N.

    The vanishing claim needs theta invariant in G, pi-separability and
    d > 1.  When theta is not invariant the per-orbit statistic is not
    constant on orbits, so the sum is evaluated chain by chain and reported
    without a claim.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not is_pi_prime_number(N.order, pi):
        raise ValueError("N is not a pi'-group")
    prime = dixon_prime(G)
    tableN = character_table_mod_p(N, prime=prime)
    if not 0 <= theta_index < len(tableN):
        raise ValueError("theta index out of range")
    invariant = theta_stabilizer(G, N, tableN, theta_index).order == G.order
    separable = is_pi_separable(G, pi, max_order=max_order)
    flags = {
        "pi_separable": separable,
        "theta_invariant": invariant,
        "claim_applies": separable and invariant and d > 1,
    }

    def stat_of(stab: Subgroup) -> int:
        H = _gc_join(G, N, stab)
        return k_d_over(H, N, theta_index, pi, d, prime=prime)

    if invariant:
        orbits = enumerate_chain_orbits(G, pi, max_order=max_order)

        def term(orbit):
            stat = stat_of(orbit.stabilizer)
            chain = orbit.representative
            return OrbitTerm(
                length=chain.length,
                sign=chain.sign,
                stabilizer_order=orbit.stabilizer.order,
                orbit_size=orbit.orbit_size,
                stat=stat,
                contribution=chain.sign * orbit.orbit_size * orbit.stabilizer.order * stat,
            )

        terms = _map_orbits(orbits, term, threads)
    else:
        # no orbit shortcut without invariance: walk every chain
        terms = []
        for chain in enumerate_all_chains(G, pi, max_order=max_order):
            stab = chain_stabilizer(G, chain)
            stat = stat_of(stab)
            terms.append(
                OrbitTerm(
                    length=chain.length,
                    sign=chain.sign,
                    stabilizer_order=stab.order,
                    orbit_size=1,
                    stat=stat,
                    contribution=chain.sign * stab.order * stat,
                )
            )
    total = sum(t.contribution for t in terms)
    if flags["claim_applies"]:
        verdict = VERIFIED if total == 0 else FAILED
    else:
        verdict = COUNTEREXAMPLE_CONTEXT
    return ChainSumReport(
        group=_label(G, label),
        pi=pi,
        parameter=f"d={d} theta[{theta_index}] over N of order {N.order}",
        hypothesis_flags=flags,
        orbits=tuple(terms),
        total=total,
        verdict=verdict,
    )


def mu_pi(
    G: Group,
    pi: PrimeSet,
    statistic: str = "k",
    label: str | None = None,
    threads: int = 1,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> ChainSumReport:
    """The normalized alternating sum of (|G_C| / |G|) * f(G_C) with f the
    class count (statistic "k") or the pi'-class count (statistic "l").

    Computed as an exact rational; the factor |G_C|/|G| cancels against the
    orbit size, so the total always reduces to an integer.
    """
    if statistic not in ("k", "l"):
        raise ValueError("statistic must be 'k' or 'l'")
    orbits = enumerate_chain_orbits(G, pi, max_order=max_order)

    def term(orbit):
        stab = orbit.stabilizer
        stat = k_count(stab) if statistic == "k" else l_count(stab, pi)
        chain = orbit.representative
        contribution = Fraction(
            chain.sign * orbit.orbit_size * stab.order * stat, G.order
        )
        return OrbitTerm(
            length=chain.length,
            sign=chain.sign,
            stabilizer_order=stab.order,
            orbit_size=orbit.orbit_size,
            stat=stat,
            contribution=contribution,
        )

    terms = _map_orbits(orbits, term, threads)
    total = sum((t.contribution for t in terms), Fraction(0))
    if total.denominator != 1:
        raise AssertionError("normalized sum is not an integer; this is a bug")
    separable = is_pi_separable(G, pi, max_order=max_order)
    return ChainSumReport(
        group=_label(G, label),
        pi=pi,
        parameter=f"mu:{statistic}",
        hypothesis_flags={"pi_separable": separable},
        orbits=tuple(terms),
        total=int(total),
        verdict=VERIFIED if separable else NON_SEPARABLE,
    )


@dataclass(frozen=True)
class CorollaryBReport:
    group: str
    pi: PrimeSet
    mu_k: ChainSumReport
    mu_l: ChainSumReport
    defect_zero_count: int
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "pi": str(self.pi),
            "mu_k": self.mu_k.to_json_dict(),
            "mu_l": self.mu_l.to_json_dict(),
            "defect_zero_count": str(self.defect_zero_count),
            "verdict": self.verdict,
        }


def corollary_b_check(
    G: Group,
    pi: PrimeSet,
    label: str | None = None,
    threads: int = 1,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> CorollaryBReport:
    """Both normalized sums against the count of pi-defect-zero characters.

    For pi-separable G all three numbers coincide; outside separability the
    report carries the computed values with a NON-SEPARABLE flag.
    """
    mu_k = mu_pi(G, pi, "k", label=label, threads=threads, max_order=max_order)
    mu_l = mu_pi(G, pi, "l", label=label, threads=threads, max_order=max_order)
    k1 = k_d(G, pi, 1)
    separable = is_pi_separable(G, pi, max_order=max_order)
    if not separable:
        verdict = NON_SEPARABLE
    elif mu_k.total == mu_l.total == k1:
        verdict = VERIFIED
    else:
        verdict = FAILED
    return CorollaryBReport(
        group=_label(G, label),
        pi=pi,
        mu_k=mu_k,
        mu_l=mu_l,
        defect_zero_count=k1,
        verdict=verdict,
    )


def webb_values(
    G: Group,
    pi: PrimeSet,
    threads: int = 1,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> tuple[int, ...]:
    """Values, indexed by the classes of G, of the alternating sum of
    |G_C| * (1_{G_C})^G over chains of pi-subgroups.

    This generalized character vanishes at every element whose order is
    divisible by a prime in pi.
    """
    return webb_report(G, pi, threads=threads, max_order=max_order).total


def webb_report(
    G: Group,
    pi: PrimeSet,
    label: str | None = None,
    threads: int = 1,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
) -> ChainSumReport:
    classes = conjugacy_classes(G, max_order=max_order)
    orbits = enumerate_chain_orbits(G, pi, max_order=max_order)

    def term(orbit):
        stab = orbit.stabilizer
        chain = orbit.representative
        values = induced_trivial_values(G, stab, max_order=max_order)
        weight = chain.sign * orbit.orbit_size * stab.order
        return OrbitTerm(
            length=chain.length,
            sign=chain.sign,
            stabilizer_order=stab.order,
            orbit_size=orbit.orbit_size,
            stat=values,
            contribution=tuple(weight * v for v in values),
        )

    terms = _map_orbits(orbits, term, threads)
    total = tuple(
        sum(t.contribution[j] for t in terms) for j in range(len(classes))
    )
    singular = tuple(
        pi_part(o, pi) > 1 for o in classes.rep_orders
    )
    ok = all(v == 0 for v, s in zip(total, singular) if s)
    return ChainSumReport(
        group=_label(G, label),
        pi=pi,
        parameter="webb",
        hypothesis_flags={"any_pi_singular_class": any(singular)},
        orbits=tuple(terms),
        total=total,
        verdict=VERIFIED if ok else FAILED,
        class_info=tuple(
            (o, s, b)
            for o, s, b in zip(classes.rep_orders, classes.sizes, singular)
        ),
    )
