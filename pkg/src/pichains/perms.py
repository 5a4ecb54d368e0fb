"""Permutations of {1..n} stored as image sequences.

A permutation is represented by the tuple of images of the points
1, 2, ..., n in order, so ``images[i]`` is where point ``i + 1`` goes.
Products compose left to right: ``(a * b)(x) == b(a(x))``.

The module-level helpers prefixed with an underscore operate on raw image
tuples and are used by the group machinery in hot loops; the
:class:`Permutation` class is the public carrier.
"""

from __future__ import annotations

import re
from math import lcm


def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Apply a, then b."""
    return tuple(b[j - 1] for j in a)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j - 1] = i + 1
    return tuple(out)


def _conj(h: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """g^-1 * h * g, in a single pass."""
    out = [0] * len(h)
    for i in range(len(h)):
        out[g[i] - 1] = g[h[i] - 1]
    return tuple(out)


def _order(a: tuple[int, ...]) -> int:
    n = 1
    seen = [False] * len(a)
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j] - 1
            length += 1
        n = lcm(n, length)
    return n


class Permutation:
    """A bijection of {1..n} with value semantics.

    Equality, hashing and ordering are those of the image tuple, which makes
    sorted element lists canonical.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(_identity(degree))

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Permutation":
        # internal fast path for already-validated tuples
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation._raw(_mul(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation._raw(_inv(self.images))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = _identity(self.degree)
        base = self.images
        while n:
            if n & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            n >>= 1
        return Permutation._raw(result)

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return Permutation._raw(_conj(self.images, g.images))

    def order(self) -> int:
        return _order(self.images)

    def is_identity(self) -> bool:
        return all(j == i + 1 for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        out = []
        seen = set()
        for i in range(1, self.degree + 1):
            if i in seen or self.images[i - 1] == i:
                continue
            cyc = [i]
            j = self.images[i - 1]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)


_CYCLE_RE = re.compile(r"\(([0-9, ]*)\)")


def perm_from_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation like ``"(1,2,3)(4,5)"``.

    Points absent from every cycle are fixed.  The empty string is the
    identity.  Raises ValueError for repeated points, points outside
    1..degree, or malformed text.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    stripped = re.sub(r"\s+", "", text)
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    consumed = 0
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != consumed:
            raise ValueError(f"malformed cycle notation: {text!r}")
        consumed = m.end()
        body = m.group(1).replace(" ", "")
        if not body:
            continue
        pts = [int(tok) for tok in body.split(",") if tok]
        if not pts:
            raise ValueError(f"malformed cycle notation: {text!r}")
        for pt in pts:
            if not 1 <= pt <= degree:
                raise ValueError(f"point {pt} out of range 1..{degree}")
            if pt in seen:
                raise ValueError(f"repeated point {pt} in cycles")
            seen.add(pt)
        for a, b in zip(pts, pts[1:]):
            images[a - 1] = b
        images[pts[-1] - 1] = pts[0]
    if consumed != len(stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    return Permutation(images)


def format_cycles(perm: Permutation) -> str:
    cycs = perm.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)
