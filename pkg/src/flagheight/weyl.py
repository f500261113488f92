"""Weyl group enumeration, dotted action, and minimal coset representatives.

Elements are deduplicated by their action on rho (a regular weight, so the
orbit map is faithful).  Breadth-first search with simple reflections tried
in increasing index order yields, for every element, the lexicographically
least among its minimal-length words.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rootsys import Root, RootSystem

DEFAULT_CAP = 10**6


class GroupTooLarge(ValueError):
    """Enumeration refused because the group/quotient exceeds the cap."""


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word (0-based simple indices) and its
    integral action matrix on fundamental-weight coordinates."""

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def act_weight(self, mu) -> tuple:
        return tuple(sum(row[j] * mu[j] for j in range(len(mu)))
                     for row in self.matrix)

    def act_root(self, rs: RootSystem, beta: Root) -> Root:
        # apply the word right-to-left: w = s_{i1}...s_{ik} acts as
        # s_{i1}(s_{i2}(...(v)))
        for i in reversed(self.word):
            beta = rs.simple_reflect_root(i, beta)
        return beta


def _identity_matrix(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _simple_matrix(rs: RootSystem, i: int):
    n = rs.rank
    A = rs.cartan_matrix
    return tuple(tuple(int(r == j) - (A[r][i] if j == i else 0) for j in range(n))
                 for r in range(n))


def _matmul(M, N):
    n = len(M)
    return tuple(tuple(sum(M[i][k] * N[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement((), _identity_matrix(rs.rank), 0)


def element_from_word(rs: RootSystem, word) -> WeylElement:
    """Build an element from a word; the length recorded is the number of
    inversions, which equals len(word) iff the word is reduced."""
    M = _identity_matrix(rs.rank)
    for i in word:
        M = _matmul(M, _simple_matrix(rs, i))
    w = WeylElement(tuple(word), M, 0)
    return WeylElement(tuple(word), M, inversion_length(rs, w))


def inversion_length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by w^{-1} -- i.e. by
    the inverse action; equals l(w)."""
    winv = element_from_word_unchecked(rs, tuple(reversed(w.word)))
    count = 0
    for beta in rs.positive_roots:
        if not winv.act_root(rs, beta).is_positive:
            count += 1
    return count


def element_from_word_unchecked(rs: RootSystem, word) -> WeylElement:
    M = _identity_matrix(rs.rank)
    for i in word:
        M = _matmul(M, _simple_matrix(rs, i))
    return WeylElement(tuple(word), M, len(word))


_WEYL_ORDER = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2**n * math.factorial(n),
    "C": lambda n: 2**n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def weyl_order(rs: RootSystem) -> int:
    """|W_G| from the classical closed forms, multiplied over the factors."""
    order = 1
    for fam, r in rs.spec.factors:
        order *= _WEYL_ORDER[fam](r)
    return order


def subgroup_order(rs: RootSystem, theta) -> int:
    """|W_Theta| for the standard Levi of type theta (0-based indices),
    by enumerating the subgroup generated by the reflections in theta."""
    return len(_orbit_bfs(rs, rs.rho, generators=sorted(theta), cap=None))


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """Complete enumeration of W_G by BFS over right multiplication with
    simple reflections, tracking the orbit of rho."""
    order = weyl_order(rs)
    if order > cap:
        raise GroupTooLarge(
            f"Weyl group of {rs.spec} has order {order}, exceeding the cap {cap}")
    return _orbit_bfs(rs, rs.rho, generators=range(rs.rank), cap=cap)


def _orbit_bfs(rs: RootSystem, xi, generators, cap) -> list[WeylElement]:
    """BFS over right multiplication by the given simple reflections,
    deduplicating elements by their action on xi.  With xi regular for the
    generated subgroup this enumerates that subgroup; with xi chosen to have
    stabilizer W_Theta it enumerates minimal-length W_G/W_Theta coset
    representatives.  Words come out lexicographically least among
    minimal-length words."""
    n = rs.rank
    generators = list(generators)
    smats = {i: _simple_matrix(rs, i) for i in generators}
    sxi = {i: rs.simple_reflect_weight(i, xi) for i in generators}
    start = identity_element(rs)
    seen = {tuple(xi)}
    out = [start]
    frontier = [(start, tuple(xi))]
    while frontier:
        nxt = []
        for w, _orbit in frontier:
            for i in generators:
                orbit2 = w.act_weight(sxi[i])
                if orbit2 in seen:
                    continue
                seen.add(orbit2)
                w2 = WeylElement(w.word + (i,), _matmul(w.matrix, smats[i]),
                                 w.length + 1)
                out.append(w2)
                nxt.append((w2, orbit2))
                if cap is not None and len(out) > cap:
                    raise GroupTooLarge(f"enumeration exceeded the cap {cap}")
        frontier = nxt
    return out


@dataclass(frozen=True)
class CosetList:
    theta: frozenset
    reps: tuple[WeylElement, ...]


def coset_representatives(rs: RootSystem, theta, cap: int = DEFAULT_CAP) -> CosetList:
    """Minimal-length representatives of W_G / W_Theta (theta 0-based), one
    per coset, in BFS (length-first) order starting from the identity.

    Left cosets w W_Theta biject with the orbit of the weight xi (zero on
    theta, one elsewhere) whose stabilizer is exactly W_Theta, so the BFS
    runs over that orbit with left multiplication by simple reflections:
    only one element per coset is ever materialized.  Any left descent of a
    minimal-length representative is again one, so BFS by levels reaches
    every coset through minimal words."""
    theta = frozenset(theta)
    if not theta <= set(range(rs.rank)):
        raise ValueError(f"theta {sorted(theta)} out of range")
    xi = tuple(0 if i in theta else 1 for i in range(rs.rank))
    smats = {i: _simple_matrix(rs, i) for i in range(rs.rank)}
    start = identity_element(rs)
    seen = {xi}
    reps = [start]
    frontier = [(start, xi)]
    while frontier:
        nxt = []
        for w, point in frontier:
            for i in range(rs.rank):
                point2 = rs.simple_reflect_weight(i, point)
                if point2 in seen:
                    continue
                seen.add(point2)
                w2 = WeylElement((i,) + w.word, _matmul(smats[i], w.matrix),
                                 w.length + 1)
                reps.append(w2)
                nxt.append((w2, point2))
                if len(reps) > cap:
                    raise GroupTooLarge(
                        f"W_G/W_Theta has more than {cap} cosets, "
                        f"exceeding the cap {cap}")
        frontier = nxt
    assert weyl_order(rs) % len(reps) == 0
    return CosetList(theta=theta, reps=tuple(reps))


# -- dotted action ----------------------------------------------------


def dotted_act(rs: RootSystem, w: WeylElement, mu) -> tuple:
    """w . mu = w(mu + rho) - rho."""
    shifted = tuple(m + r for m, r in zip(mu, rs.rho))
    return tuple(x - r for x, r in zip(w.act_weight(shifted), rs.rho))


def to_dominant_dotted(rs: RootSystem, lam):
    """Borel-Weil-Bott normalization.

    If rho + lam is regular, return (w, lam0) with w^{-1}(rho+lam) = rho+lam0
    strictly dominant; the cohomology degree is w.length.  If rho + lam is
    singular return None (all cohomology vanishes).
    """
    nu = tuple(m + r for m, r in zip(lam, rs.rho))
    word = []
    while True:
        if any(c == 0 for c in nu):
            return None
        for i in range(rs.rank):
            if nu[i] < 0:
                nu = rs.simple_reflect_weight(i, nu)
                word.append(i)
                break
        else:
            break
    # nu = s_{ik}...s_{i1}(rho+lam), so w = s_{i1}...s_{ik}
    w = element_from_word(rs, tuple(word))
    lam0 = tuple(c - r for c, r in zip(nu, rs.rho))
    return w, lam0


def longest_element(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylElement:
    """The unique element of maximal length (maps Sigma+ to Sigma-)."""
    elements = enumerate_weyl(rs, cap)
    w0 = max(elements, key=lambda w: w.length)
    assert w0.length == rs.num_positive_roots
    return w0
