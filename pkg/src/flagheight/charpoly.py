"""Exact Weyl dimension polynomials in two formal variables, weight
multiplicities (Freudenthal recursion plus a brute-force Kostant oracle),
and formal/numeric Weyl characters.

All polynomial arithmetic is sparse and exact over Fraction; the two
indeterminates are the scaling variable m of the line bundle and the shift
variable k along an isotropy root.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .parabolic import NotAmple, ParabolicData, check_ample, psi_grading
from .rootsys import Root, RootSystem
from .weyl import enumerate_weyl, to_dominant_dotted


# ---------------------------------------------------------------------
# sparse bivariate polynomials over Q
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class BivariatePolynomial:
    """Sparse exact polynomial in (m, k): terms maps (deg_m, deg_k) to a
    nonzero Fraction coefficient."""

    terms: dict

    @staticmethod
    def from_dict(d: dict) -> "BivariatePolynomial":
        return BivariatePolynomial({e: Fraction(c) for e, c in d.items() if c})

    @staticmethod
    def constant(c) -> "BivariatePolynomial":
        return BivariatePolynomial.from_dict({(0, 0): Fraction(c)})

    @staticmethod
    def linear(const, coeff_m, coeff_k) -> "BivariatePolynomial":
        return BivariatePolynomial.from_dict(
            {(0, 0): const, (1, 0): coeff_m, (0, 1): coeff_k})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return BivariatePolynomial.from_dict(out)

    def __neg__(self):
        return BivariatePolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomial.from_dict(
                {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for (am, ak), ac in self.terms.items():
            for (bm, bk), bc in other.terms.items():
                e = (am + bm, ak + bk)
                out[e] = out.get(e, Fraction(0)) + ac * bc
        return BivariatePolynomial.from_dict(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def deg_m(self) -> int:
        return max((e[0] for e in self.terms), default=-1)

    def deg_k(self) -> int:
        return max((e[1] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((e[0] + e[1] for e in self.terms), default=-1)

    def coeff(self, deg_m: int, deg_k: int) -> Fraction:
        return self.terms.get((deg_m, deg_k), Fraction(0))

    def evaluate(self, m, k) -> Fraction:
        return sum((c * Fraction(m) ** em * Fraction(k) ** ek
                    for (em, ek), c in self.terms.items()), Fraction(0))

    def substitute_k(self, image: "BivariatePolynomial") -> "BivariatePolynomial":
        """Ring homomorphism m -> m, k -> image."""
        out = BivariatePolynomial({})
        powers = {0: BivariatePolynomial.constant(1)}
        maxk = self.deg_k()
        for d in range(1, maxk + 1):
            powers[d] = powers[d - 1] * image
        for (em, ek), c in self.terms.items():
            out = out + powers[ek] * BivariatePolynomial.from_dict({(em, 0): c})
        return out


# ---------------------------------------------------------------------
# Weyl dimension polynomials and the graded sums f_j
# ---------------------------------------------------------------------


def dim_polynomial(pd: ParabolicData, lam, alpha: Root) -> BivariatePolynomial:
    """The Weyl dimension polynomial of the weight rho + m*lam - k*alpha:
    the product over beta in Sigma+ of
    (1 + (m <beta^vee, lam> - k <beta^vee, alpha>) / <beta^vee, rho>)."""
    rs = pd.rs
    if alpha not in pd.psi:
        raise ValueError(f"{alpha.coords} is not an isotropy root")
    if not check_ample(pd, lam):
        raise NotAmple(f"{lam} is not ample for theta={sorted(pd.theta)}")
    poly = BivariatePolynomial.constant(1)
    for beta in rs.positive_roots:
        denom = rs._pairing(rs.rho, beta)
        cm = Fraction(rs._pairing(lam, beta), denom)
        ck = Fraction(-rs.pairing_root(beta, alpha), denom)
        poly = poly * BivariatePolynomial.linear(1, cm, ck)
    return poly


def f_j(pd: ParabolicData, lam, j: int) -> BivariatePolynomial:
    """Sum of the dimension polynomials over the grading bucket Psi_j."""
    grading = psi_grading(pd, lam)
    total = BivariatePolynomial({})
    for alpha in grading.buckets.get(j, ()):
        total = total + dim_polynomial(pd, lam, alpha)
    return total


def skew_symmetry_holds(pd: ParabolicData, lam, alpha: Root) -> bool:
    """Exact polynomial identity d(m, k + <a^vee, rho + m lam>) = -d(m, -k),
    with the affine shift <a^vee, rho> + m <a^vee, lam> substituted into k."""
    rs = pd.rs
    d = dim_polynomial(pd, lam, alpha)
    c0 = rs._pairing(rs.rho, alpha)
    c1 = rs._pairing(lam, alpha)
    shift = BivariatePolynomial.from_dict({(0, 1): 1, (0, 0): c0, (1, 0): c1})
    lhs = d.substitute_k(shift)
    rhs = -d.substitute_k(BivariatePolynomial.from_dict({(0, 1): -1}))
    return lhs.terms == rhs.terms


# ---------------------------------------------------------------------
# dimensions and multiplicities
# ---------------------------------------------------------------------


def weyl_dim(rs: RootSystem, lam0) -> int:
    """Dimension of the irreducible with highest weight lam0 (dominant):
    product over Sigma+ of <a^vee, rho + lam0> / <a^vee, rho>."""
    if not rs.is_dominant(lam0):
        raise ValueError(f"{lam0} is not dominant")
    shifted = tuple(l + r for l, r in zip(lam0, rs.rho))
    out = Fraction(1)
    for beta in rs.positive_roots:
        out *= Fraction(rs._pairing(shifted, beta), rs._pairing(rs.rho, beta))
    assert out.denominator == 1
    return int(out)


def _dominant_weight_candidates(rs: RootSystem, lam0, subset):
    """All subset-dominant weights mu with lam0 - mu a non-negative integer
    combination of the simple roots in subset.  Box bound: with c the root
    coordinates of lam0 - mu, A_S c <= lam0|_S so c <= A_S^{-1} lam0|_S."""
    from .rootsys import _invert_rational

    S = sorted(subset)
    if not S:
        return [tuple(lam0)]
    sub_A = [[rs.cartan_matrix[i][j] for j in S] for i in S]
    sub_inv = _invert_rational(sub_A)
    bounds = []
    for r in range(len(S)):
        b = sum(sub_inv[r][c] * lam0[S[c]] for c in range(len(S)))
        bounds.append(int(b))
    out = []
    for combo in itertools.product(*(range(b + 1) for b in bounds)):
        mu = list(lam0)
        for idx, ci in zip(S, combo):
            for r in range(rs.rank):
                mu[r] -= ci * rs.cartan_matrix[r][idx]
        if all(mu[i] >= 0 for i in S):
            out.append(tuple(mu))
    return out


def freudenthal(rs: RootSystem, lam0, subset=None) -> dict:
    """Full weight-multiplicity table (weight -> multiplicity) of the
    irreducible representation with highest weight lam0, by the Freudenthal
    recursion over dominant weights followed by Weyl-orbit expansion.

    With `subset` given, the representation is the one of the Levi subsystem
    generated by those simple roots (lam0 must be dominant there); this is
    used for the localized Lefschetz character sums.
    """
    subset = tuple(range(rs.rank)) if subset is None else tuple(sorted(subset))
    if not rs.is_dominant(lam0, subset):
        raise ValueError(f"{lam0} is not dominant on {subset}")
    lam0 = tuple(lam0)
    pos = [b for b in rs.positive_roots
           if {i for i, c in enumerate(b.coords) if c} <= set(subset)]
    fw = {b: rs.root_to_weight(b.coords) for b in pos}

    candidates = _dominant_weight_candidates(rs, lam0, subset)
    # order by decreasing height of mu (equivalently increasing depth)
    def depth(mu):
        c = rs.weight_to_root_coords(tuple(l - m for l, m in zip(lam0, mu)))
        return sum(c)

    candidates.sort(key=depth)
    mult: dict[tuple, int] = {}
    # (lam0 + rho, lam0 + rho) with the full rho works for the Levi too,
    # since lam0 - mu lies in the span of the subset roots
    rho = rs.rho
    lr = tuple(l + r for l, r in zip(lam0, rho))
    norm_top = rs.inner(lr, lr)
    dom_mult: dict[tuple, int] = {}
    for mu in candidates:
        if mu == lam0:
            dom_mult[mu] = 1
            continue
        acc = Fraction(0)
        for b in pos:
            k = 1
            while True:
                nu = tuple(m + k * f for m, f in zip(mu, fw[b]))
                nd, _ = rs.dominant_representative(nu, subset)
                mnu = dom_mult.get(nd, 0)
                if mnu == 0 and not _leq_in_root_cone(rs, nd, lam0, subset):
                    break
                if mnu:
                    acc += mnu * rs.inner(nu, rs.root_to_weight(b.coords))
                k += 1
        mr = tuple(m + r for m, r in zip(mu, rho))
        denom = norm_top - rs.inner(mr, mr)
        if denom == 0:
            dom_mult[mu] = 0
            continue
        val = 2 * acc / denom
        assert val.denominator == 1
        dom_mult[mu] = int(val)

    # expand Weyl orbits
    for mu, m in dom_mult.items():
        if m == 0:
            continue
        orbit = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for nu in frontier:
                for i in subset:
                    r = rs.simple_reflect_weight(i, nu)
                    if r not in orbit:
                        orbit.add(r)
                        nxt.append(r)
            frontier = nxt
        for nu in orbit:
            mult[nu] = m
    return mult


def _leq_in_root_cone(rs: RootSystem, mu, lam0, subset) -> bool:
    """lam0 - mu a non-negative integral combination of subset simple roots."""
    c = rs.weight_to_root_coords(tuple(l - m for l, m in zip(lam0, mu)))
    for i, ci in enumerate(c):
        if ci.denominator != 1 or ci < 0:
            return False
        if ci > 0 and i not in subset:
            return False
    return True


def _kostant_partition_count(rs: RootSystem, target) -> int:
    """Number of ways to write `target` (simple-root coordinates, integers)
    as a non-negative integer combination of the positive roots."""
    coords = tuple(target)
    if any(c < 0 for c in coords):
        return 0
    roots = [r.coords for r in rs.positive_roots]

    memo: dict = {}

    def count(idx, rest):
        if all(c == 0 for c in rest):
            return 1
        if idx == len(roots):
            return 0
        key = (idx, rest)
        if key in memo:
            return memo[key]
        r = roots[idx]
        total = 0
        times = 0
        cur = rest
        while all(c >= 0 for c in cur):
            total += count(idx + 1, cur)
            cur = tuple(c - ri for c, ri in zip(cur, r))
            times += 1
        memo[key] = total
        return total

    return count(0, coords)


def kostant_multiplicity(rs: RootSystem, lam0, mu) -> int:
    """Multiplicity of mu in the irreducible with highest weight lam0 via
    the alternating Weyl sum over the Kostant partition function (the
    exponential-cost oracle)."""
    if not rs.is_dominant(lam0):
        raise ValueError(f"{lam0} is not dominant")
    lr = tuple(l + r for l, r in zip(lam0, rs.rho))
    mr = tuple(m + r for m, r in zip(mu, rs.rho))
    total = 0
    for w in enumerate_weyl(rs):
        diff = tuple(a - b for a, b in zip(w.act_weight(lr), mr))
        c = rs.weight_to_root_coords(diff)
        if any(x.denominator != 1 for x in c):
            continue
        total += w.sign * _kostant_partition_count(
            rs, tuple(int(x) for x in c))
    return total


# ---------------------------------------------------------------------
# formal characters with the dotted normalization
# ---------------------------------------------------------------------


def formal_character(rs: RootSystem, nu) -> dict:
    """The signed formal character chi_nu (nu plays the role of rho+lambda):
    empty if nu is singular, else (-1)^{l(w)} times the character table of
    the irreducible with highest weight lam0, where w^{-1} nu = rho + lam0
    is strictly dominant."""
    lam = tuple(n - r for n, r in zip(nu, rs.rho))
    res = to_dominant_dotted(rs, lam)
    if res is None:
        return {}
    w, lam0 = res
    table = freudenthal(rs, lam0)
    if w.sign == 1:
        return table
    return {mu: -m for mu, m in table.items()}


# ---------------------------------------------------------------------
# numeric evaluation (cross-checks only; floats allowed here)
# ---------------------------------------------------------------------


class NotRegular(ValueError):
    """The evaluation point X lies on a root hyperplane mod Z."""


def _weight_at_point(rs: RootSystem, mu, X) -> Fraction:
    """mu(X) with X in fundamental-coweight coordinates (alpha_i(X) = X_i)."""
    c = rs.weight_to_root_coords(mu)
    return sum((ci * Fraction(x) for ci, x in zip(c, X)), Fraction(0))


def _root_at_point(beta: Root, X) -> Fraction:
    return sum((Fraction(c) * Fraction(x) for c, x in zip(beta.coords, X)),
               Fraction(0))


def check_regular_point(rs: RootSystem, X):
    for beta in rs.positive_roots:
        v = _root_at_point(beta, X)
        if v.denominator == 1:
            raise NotRegular(
                f"alpha(X) = {v} is integral for root {beta.coords}")


def char_value(rs: RootSystem, nu, X) -> complex:
    """Weyl character formula value of chi_nu at e^X: the alternating sum
    of e^{2 pi i (w nu)(X)} over W divided by prod 2i sin(pi alpha(X))."""
    check_regular_point(rs, X)
    num = 0j
    for w in enumerate_weyl(rs):
        val = _weight_at_point(rs, w.act_weight(tuple(nu)), X)
        num += w.sign * cmath.exp(2j * cmath.pi * float(val))
    den = 1 + 0j
    for beta in rs.positive_roots:
        den *= 2j * cmath.sin(cmath.pi * float(_root_at_point(beta, X)))
    return num / den


def character_sum_value(rs: RootSystem, table: dict, X, w=None) -> complex:
    """Sum_mu mult(mu) e^{2 pi i (w mu)(X)} for a multiplicity table."""
    out = 0j
    for mu, m in table.items():
        if w is not None:
            mu = w.act_weight(mu)
        out += m * cmath.exp(2j * cmath.pi * float(_weight_at_point(rs, mu, X)))
    return out


def lefschetz_localized_character(pd: ParabolicData, lam, X) -> complex:
    """The fixed-point side of the classical Lefschetz formula: the sum over
    minimal coset representatives w of W_G/W_K of

        prod_{alpha in Psi} (1 - e^{-2 pi i (w alpha)(X)})^{-1}
        * sum_mu mult_K(mu) e^{2 pi i (w mu)(X)}

    with mult_K the Levi character of highest weight lam.  Numerically equal
    to the full character of the irreducible with highest weight lam."""
    from .weyl import coset_representatives

    rs = pd.rs
    check_regular_point(rs, X)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} must be dominant")
    levi_table = freudenthal(rs, lam, subset=pd.theta)
    total = 0j
    for w in coset_representatives(rs, pd.theta).reps:
        td = 1 + 0j
        for alpha in pd.psi:
            walpha = w.act_root(rs, alpha)
            td *= 1 / (1 - cmath.exp(-2j * cmath.pi *
                                     float(_root_at_point(walpha, X))))
        total += td * character_sum_value(rs, levi_table, X, w=w)
    return total
