"""Character tables over a prime field, computed with the Dixon-Schneider
method: simultaneous eigenspace splitting of the class-multiplication
matrices over F_p for a prime p = 1 (mod exp(G)) with p > 2|G|.

With such a prime, F_p is a splitting field and every integer quantity the
counting functions need (degrees, multiplicities, induced-character values)
is a nonnegative integer below p/2, so residues lift uniquely.  No complex
or cyclotomic arithmetic appears anywhere; the conjugate of a character
value is its value on the inverse class.
"""

from __future__ import annotations

from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    ClassData,
    Group,
    _check_bound,
    conjugacy_classes,
)
from .perms import _inv, _mul
from .primes import is_prime

__all__ = [
    "CharTableModP",
    "dixon_prime",
    "character_table_mod_p",
    "character_degrees",
    "induced_trivial_values",
    "restriction_multiplicity",
    "class_fusion",
]

_TABLE_CACHE: dict = {}
_DEGREE_CACHE: dict = {}

# number of tables built in this process; every one of them passed the
# orthogonality verification, which runs unconditionally at construction
tables_built = 0


def dixon_prime(G: Group) -> int:
    """Smallest prime p with p = 1 (mod exp(G)) and p > 2|G|."""
    e = G.exponent()
    p = 2 * G.order + 1
    p += (-(p - 1)) % e
    while True:
        if p > 2 * G.order and is_prime(p):
            return p
        p += e if e > 1 else 1


def _sqrt_mod_p(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(M: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right nullspace of M over F_p."""
    n = len(M)
    rows, pivots = _rref(M, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][fc]) % p
        basis.append(v)
    return basis


def _charpoly(M: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial of M over F_p, low-degree coefficients
    first, monic.  Hessenberg reduction by similarity transformations,
    followed by the standard determinant recurrence."""
    n = len(M)
    H = [[x % p for x in row] for row in M]
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if H[i][j]), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            H[pivot], H[j + 1] = H[j + 1], H[pivot]
            for row in H:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = pow(H[j + 1][j], p - 2, p)
        for i in range(j + 2, n):
            if H[i][j]:
                f = H[i][j] * inv % p
                H[i] = [(a - f * b) % p for a, b in zip(H[i], H[j + 1])]
                for row in H:
                    row[j + 1] = (row[j + 1] + f * row[i]) % p
    # polys[m] is the charpoly of the leading m x m block
    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        d = H[m - 1][m - 1]
        prev = polys[m - 1]
        poly = [0] + prev
        for i, c in enumerate(prev):
            poly[i] = (poly[i] - d * c) % p
        beta = 1
        for i in range(1, m):
            beta = beta * H[m - i][m - i - 1] % p
            coeff = H[m - i - 1][m - 1] * beta % p
            if coeff:
                sub = polys[m - i - 1]
                for t, c in enumerate(sub):
                    poly[t] = (poly[t] - coeff * c) % p
        polys.append([c % p for c in poly])
    return polys[n]


def _poly_roots(poly: list[int], p: int) -> list[int]:
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


class CharTableModP:
    """Irreducible character values as residues mod a Dixon prime.

    ``values[i][j]`` is the value of the i-th irreducible character at the
    j-th conjugacy class; ``degrees[i]`` is the lifted integer degree.  Rows
    are sorted by (degree, value tuple) and the identity class is column 0.
    """

    def __init__(self, group: Group, classes: ClassData, prime_p: int, values, degrees):
        self.group = group
        self.classes = classes
        self.prime_p = prime_p
        self.values: tuple[tuple[int, ...], ...] = tuple(map(tuple, values))
        self.degrees: tuple[int, ...] = tuple(degrees)

    def __len__(self) -> int:
        return len(self.values)

    def inverse_class(self, j: int) -> int:
        return self.classes.inverse_class(j)

    def trivial_index(self) -> int:
        ones = tuple([1] * len(self.classes.sizes))
        return self.values.index(ones)

    def inner_product(self, row_values, other_values) -> int:
        """Lifted inner product of two class functions given as value rows,
        where the second argument is conjugated (read on inverse classes)."""
        p = self.prime_p
        total = 0
        for j, size in enumerate(self.classes.sizes):
            total += size * row_values[j] * other_values[self.inverse_class(j)]
        r = total % p
        r = r * pow(self.group.order % p, p - 2, p) % p
        return _lift(r, p)

    def verify_orthogonality(self) -> None:
        p = self.prime_p
        order = self.group.order % p
        k = len(self.values)
        sizes = self.classes.sizes
        inv = [self.inverse_class(j) for j in range(k)]
        for a in range(k):
            for b in range(k):
                s = 0
                for j in range(k):
                    s += sizes[j] * self.values[a][j] * self.values[b][inv[j]]
                expected = order if a == b else 0
                if s % p != expected % p:
                    raise RuntimeError("row orthogonality fails; this is a bug")
        for i in range(k):
            for j in range(k):
                s = 0
                for a in range(k):
                    s += self.values[a][i] * self.values[a][inv[j]]
                expected = self.classes.centralizer_order(i) if i == j else 0
                if s % p != expected % p:
                    raise RuntimeError("column orthogonality fails; this is a bug")


def _lift(r: int, p: int) -> int:
    """Lift a residue known to represent an integer in (-p/2, p/2)."""
    r %= p
    return r if r <= (p - 1) // 2 else r - p


def character_table_mod_p(
    G: Group, prime: int | None = None, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> CharTableModP:
    _check_bound(G, max_order)
    if prime is None:
        prime = dixon_prime(G)
    key = (G.element_set(), prime)
    try:
        return _TABLE_CACHE[key]
    except KeyError:
        pass
    p = prime
    if not is_prime(p) or (p - 1) % G.exponent() or p <= 2 * G.order:
        raise ValueError(f"{p} is not a valid Dixon prime for this group")
    classes = conjugacy_classes(G, max_order=max_order)
    k = len(classes)
    class_of = classes._class_of

    def class_matrix(i: int) -> list[list[int]]:
        # A[j][t] counts pairs (x, y) in C_i x C_j with x*y = rep_t; the
        # central-character vectors are the simultaneous eigenvectors of
        # these matrices
        A = [[0] * k for _ in range(k)]
        for t in range(k):
            rep = classes.representatives[t].images
            for x in classes.class_elements(i):
                A[class_of[_mul(_inv(x), rep)]][t] += 1
        return A

    # split the class space into common eigenspaces, smallest classes first
    order_of_use = sorted(range(1, k), key=lambda i: (classes.sizes[i], i))
    spaces: list[list[list[int]]] = [
        [[1 if a == b else 0 for b in range(k)] for a in range(k)]
    ]
    for i in order_of_use:
        if all(len(basis) == 1 for basis in spaces):
            break
        A = class_matrix(i)
        new_spaces: list[list[list[int]]] = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            basis, pivots = _rref(basis, p)
            m = len(basis)
            # Basis vectors are stored as rows but transform as column
            # vectors under A; coordinates of a member x.basis satisfy
            # x.M_W = lambda.x, so eigencoordinates come from the transpose.
            M_W = []
            for row in basis:
                image = [
                    sum(A[c][t] * row[t] for t in range(k)) % p for c in range(k)
                ]
                coords = [image[pc] for pc in pivots]
                resid = image[:]
                for s, pc in enumerate(pivots):
                    f = coords[s]
                    if f:
                        resid = [(x - f * y) % p for x, y in zip(resid, basis[s])]
                if any(resid):
                    raise RuntimeError("subspace is not invariant; this is a bug")
                M_W.append(coords)
            Mt = [[M_W[b][a] for b in range(m)] for a in range(m)]
            roots = sorted(set(_poly_roots(_charpoly(Mt, p), p)))
            split_dim = 0
            for lam in roots:
                shifted = [
                    [(Mt[a][b] - (lam if a == b else 0)) % p for b in range(m)]
                    for a in range(m)
                ]
                eigen_basis = []
                for coords in _nullspace(shifted, p):
                    vec = [0] * k
                    for s, c in enumerate(coords):
                        if c:
                            vec = [(x + c * y) % p for x, y in zip(vec, basis[s])]
                    eigen_basis.append(vec)
                if eigen_basis:
                    new_spaces.append(eigen_basis)
                    split_dim += len(eigen_basis)
            if split_dim != m:
                raise RuntimeError(
                    "eigenspace splitting failed to separate; this is a bug"
                )
        spaces = new_spaces

    for basis in spaces:
        if len(basis) != 1:
            raise RuntimeError("eigenspace splitting incomplete; this is a bug")

    rows = []
    order_mod = G.order % p
    for basis in spaces:
        v = basis[0]
        if v[0] % p == 0:
            raise RuntimeError("eigenvector vanishes at the identity; this is a bug")
        inv0 = pow(v[0], p - 2, p)
        omega = [x * inv0 % p for x in v]
        s = 0
        for j in range(k):
            s += omega[j] * omega[classes.inverse_class(j)] * pow(
                classes.sizes[j], p - 2, p
            )
        s %= p
        d2 = order_mod * pow(s, p - 2, p) % p
        d = _sqrt_mod_p(d2, p)
        d = min(d, p - d)
        if d == 0 or d * d % p != d2:
            raise RuntimeError("degree recovery failed; this is a bug")
        values = [
            d * omega[j] % p * pow(classes.sizes[j], p - 2, p) % p for j in range(k)
        ]
        rows.append((d, tuple(values)))
    rows.sort()
    table = CharTableModP(
        G,
        classes,
        p,
        [r[1] for r in rows],
        [r[0] for r in rows],
    )
    if sum(d * d for d in table.degrees) != G.order:
        raise RuntimeError("degree square sum mismatch; this is a bug")
    table.verify_orthogonality()
    global tables_built
    tables_built += 1
    _TABLE_CACHE[key] = table
    return table


def character_degrees(G: Group, max_order: int = DEFAULT_ENUMERATION_BOUND):
    """Degrees of the irreducible characters, ascending."""
    key = G.element_set()
    try:
        return _DEGREE_CACHE[key]
    except KeyError:
        degs = character_table_mod_p(G, max_order=max_order).degrees
        _DEGREE_CACHE[key] = degs
        return degs


def induced_trivial_values(
    G: Group, H: Group, max_order: int = DEFAULT_ENUMERATION_BOUND
) -> tuple[int, ...]:
    """Values of the permutation character induced from the trivial
    character of H, indexed by the classes of G.

    The value at the class of g is |C_G(g)| * |g^G meet H| / |H|, the number
    of cosets of H fixed by g.
    """
    classes = conjugacy_classes(G, max_order=max_order)
    counts = [0] * len(classes)
    class_of = classes._class_of
    for t in H.element_tuples():
        try:
            counts[class_of[t]] += 1
        except KeyError:
            raise ValueError("H is not a subgroup of G") from None
    out = []
    for j, c in enumerate(counts):
        num = classes.centralizer_order(j) * c
        if num % H.order:
            raise AssertionError("fixed-coset count is not integral; this is a bug")
        out.append(num // H.order)
    return tuple(out)


def class_fusion(tableG: CharTableModP, tableN: CharTableModP) -> tuple[int, ...]:
    """For each class of the subgroup, the index of the ambient class
    containing it."""
    class_of = tableG.classes._class_of
    out = []
    for rep in tableN.classes.representatives:
        try:
            out.append(class_of[rep.images])
        except KeyError:
            raise ValueError("subgroup element missing from the ambient group") from None
    return tuple(out)


def restriction_multiplicity(
    tableG: CharTableModP,
    chi_index: int,
    tableN: CharTableModP,
    theta_index: int,
    fusion=None,
) -> int:
    """Multiplicity of the subgroup character theta in the restriction of
    chi, computed mod p and lifted (it is an integer in [0, chi(1)])."""
    if tableG.prime_p != tableN.prime_p:
        raise ValueError("tables must share one prime")
    p = tableG.prime_p
    if fusion is None:
        fusion = class_fusion(tableG, tableN)
    else:
        fusion = tuple(fusion)
        class_of = tableG.classes._class_of
        for j, rep in enumerate(tableN.classes.representatives):
            if class_of.get(rep.images) != fusion[j]:
                raise ValueError("fusion map is inconsistent with the classes")
    chi = tableG.values[chi_index]
    theta = tableN.values[theta_index]
    total = 0
    for j, size in enumerate(tableN.classes.sizes):
        total += size * chi[fusion[j]] * theta[tableN.inverse_class(j)]
    n_order = tableN.group.order
    r = total % p * pow(n_order % p, p - 2, p) % p
    m = _lift(r, p)
    if m < 0 or m > tableG.degrees[chi_index]:
        raise RuntimeError("restriction multiplicity out of range; this is a bug")
    return m
