"""Built-in catalog of permutation groups used by the CLI and test battery.

Keys are exact strings.  Groups are built lazily and cached, always from the
same generator data, so constructions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .groups import Group, closure_element_tuples, subgroup_from_elements
from .perms import Permutation, _mul, _order, perm_from_cycles
from .primes import prime_factors

__all__ = ["CatalogEntry", "catalog_keys", "catalog_entry", "catalog_group"]


@dataclass
class CatalogEntry:
    key: str
    description: str
    solvable: bool
    builder: Callable[[], Group]
    expected_order: int
    _group: Group | None = field(default=None, repr=False)

    def group(self) -> Group:
        if self._group is None:
            G = self.builder()
            if G.order != self.expected_order:
                raise AssertionError(
                    f"catalog entry {self.key}: order {G.order}, expected {self.expected_order}"
                )
            self._group = G
        return self._group


def _cyclic(n: int) -> Group:
    if n == 1:
        return Group([], degree=1)
    return Group([perm_from_cycles(f"({','.join(map(str, range(1, n + 1)))})", n)])


def _dihedral(n: int) -> Group:
    """Dihedral group of order 2n acting on an n-gon."""
    rot = perm_from_cycles(f"({','.join(map(str, range(1, n + 1)))})", n)
    refl = Permutation([1] + list(range(n, 1, -1)))
    return Group([rot, refl])


def _symmetric(n: int) -> Group:
    cycle = perm_from_cycles(f"({','.join(map(str, range(1, n + 1)))})", n)
    swap = perm_from_cycles("(1,2)", n)
    return Group([cycle, swap])


def _alternating(n: int) -> Group:
    three = perm_from_cycles("(1,2,3)", n)
    if n % 2:
        rest = perm_from_cycles(f"({','.join(map(str, range(1, n + 1)))})", n)
    else:
        rest = perm_from_cycles(f"({','.join(map(str, range(2, n + 1)))})", n)
    return Group([three, rest])


_Q8_MULT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quaternion() -> Group:
    units = [(s, a) for a in "1ijk" for s in (1, -1)]
    index = {u: i + 1 for i, u in enumerate(units)}

    def left_mult(by):
        images = []
        for (s, a) in units:
            s2, a2 = _Q8_MULT[(by[1], a)]
            images.append(index[(by[0] * s2 * s, a2)])
        return Permutation(images)

    return Group([left_mult((1, "i")), left_mult((1, "j"))])


def _matrix_group(mats, p: int, dim: int) -> Group:
    """Permutation action of matrices over F_p on the nonzero vectors."""
    vectors = []
    for v in range(p**dim):
        coords = []
        x = v
        for _ in range(dim):
            coords.append(x % p)
            x //= p
        if any(coords):
            vectors.append(tuple(coords))
    vectors.sort()
    index = {v: i + 1 for i, v in enumerate(vectors)}

    def to_perm(M):
        images = []
        for v in vectors:
            w = tuple(sum(M[r][c] * v[c] for c in range(dim)) % p for r in range(dim))
            images.append(index[w])
        return Permutation(images)

    return Group([to_perm(M) for M in mats])


def _sl23() -> Group:
    return _matrix_group([[[1, 1], [0, 1]], [[0, 2], [1, 0]]], 3, 2)


def _gl32() -> Group:
    cyc = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    trans = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    return _matrix_group([cyc, trans], 2, 3)


def _psl2(q: int) -> Group:
    """Projective line action of x -> x + 1 and x -> -1/x on q + 1 points.

    Points are numbered 1 = infinity, then 2..q+1 for 0..q-1.
    """
    def pt(x):
        return 2 + x

    shift = [0] * (q + 1)
    shift[0] = 1
    for x in range(q):
        shift[pt(x) - 1] = pt((x + 1) % q)
    neg_inv = [0] * (q + 1)
    neg_inv[0] = pt(0)
    neg_inv[pt(0) - 1] = 1
    for x in range(1, q):
        neg_inv[pt(x) - 1] = pt((-pow(x, q - 2, q)) % q)
    return Group([Permutation(shift), Permutation(neg_inv)])


def _psl2_11_degree11() -> Group:
    """Action of PSL(2,11) on the cosets of an index-11 subgroup.

    The subgroup is found deterministically as the first pair of an
    involution and an order-5 element generating a group of order 60.
    """
    G = _psl2(11)
    elems = G.element_tuples()
    involutions = [t for t in elems if _order(t) == 2]
    fives = [t for t in elems if _order(t) == 5]
    s = involutions[0]
    for t in fives:
        closure = closure_element_tuples([s, t], G.degree, cap=61)
        if closure is not None and len(closure) == 60:
            H = subgroup_from_elements(G, closure)
            return _coset_image(G, H)
    raise AssertionError("no order-60 subgroup found; this is a bug")


def _coset_image(G: Group, H) -> Group:
    """Permutation image of G on the right cosets of H.

    Faithful whenever H contains no nontrivial normal subgroup of G."""
    h_tuples = H.element_tuples()
    coset_of: dict = {}
    reps: list = []
    for t in G.element_tuples():
        if t in coset_of:
            continue
        i = len(reps)
        reps.append(t)
        for h in h_tuples:
            coset_of[_mul(h, t)] = i
    gens = []
    for g in G.gen_tuples:
        gens.append(Permutation(tuple(coset_of[_mul(rep, g)] + 1 for rep in reps)))
    return Group(gens)


def _direct_product(A: Group, B: Group) -> Group:
    gens = []
    for g in A.generators:
        gens.append(Permutation(tuple(g.images) + tuple(range(A.degree + 1, A.degree + B.degree + 1))))
    for g in B.generators:
        gens.append(Permutation(tuple(range(1, A.degree + 1)) + tuple(x + A.degree for x in g.images)))
    return Group(gens)


def _c7_c3() -> Group:
    a = perm_from_cycles("(1,2,3,4,5,6,7)", 7)
    b = perm_from_cycles("(2,3,5)(4,7,6)", 7)
    return Group([a, b])


def _c3_c4() -> Group:
    a = perm_from_cycles("(1,2,3)", 7)
    t = perm_from_cycles("(2,3)(4,5,6,7)", 7)
    return Group([a, t])


def _build_catalog() -> dict[str, CatalogEntry]:
    entries: list[CatalogEntry] = [
        CatalogEntry("trivial", "trivial group", True, lambda: Group([], degree=1), 1),
    ]
    for n in range(2, 31):
        entries.append(
            CatalogEntry(f"C{n}", f"cyclic group of order {n}", True,
                         (lambda n=n: _cyclic(n)), n)
        )
    for n in range(2, 16):
        entries.append(
            CatalogEntry(f"D{2 * n}", f"dihedral group of order {2 * n}", True,
                         (lambda n=n: _dihedral(n)), 2 * n)
        )
    entries += [
        CatalogEntry("S3", "symmetric group on 3 points", True, lambda: _symmetric(3), 6),
        CatalogEntry("S4", "symmetric group on 4 points", True, lambda: _symmetric(4), 24),
        CatalogEntry("S5", "symmetric group on 5 points", False, lambda: _symmetric(5), 120),
        CatalogEntry("A4", "alternating group on 4 points", True, lambda: _alternating(4), 12),
        CatalogEntry("A5", "alternating group on 5 points", False, lambda: _alternating(5), 60),
        CatalogEntry("SL2_3", "SL(2,3) on the 8 nonzero vectors of F_3^2", True, _sl23, 24),
        CatalogEntry("Q8", "quaternion group, regular action", True, _quaternion, 8),
        CatalogEntry("C7:C3", "Frobenius group of order 21", True, _c7_c3, 21),
        CatalogEntry("C3:C4", "dicyclic group of order 12", True, _c3_c4, 12),
        CatalogEntry("S3xC5", "direct product of order 30", True,
                     lambda: _direct_product(_symmetric(3), _cyclic(5)), 30),
        CatalogEntry("PSL2_7", "PSL(2,7) on the projective line, degree 8", False,
                     lambda: _psl2(7), 168),
        CatalogEntry("PSL2_7_deg7", "PSL(2,7) as GL(3,2) on 7 points", False, _gl32, 168),
        CatalogEntry("PSL2_11", "PSL(2,11) on the projective line, degree 12", False,
                     lambda: _psl2(11), 660),
        CatalogEntry("PSL2_11_deg11", "PSL(2,11) on 11 points", False,
                     _psl2_11_degree11, 660),
    ]
    return {e.key: e for e in entries}


_CATALOG = _build_catalog()


def catalog_keys() -> tuple[str, ...]:
    return tuple(_CATALOG)


def catalog_entry(key: str) -> CatalogEntry:
    try:
        return _CATALOG[key]
    except KeyError:
        raise ValueError(f"unknown catalog key: {key!r}") from None


def catalog_group(key: str) -> Group:
    return catalog_entry(key).group()


def catalog_primes(key: str) -> tuple[int, ...]:
    return prime_factors(catalog_group(key).order)
