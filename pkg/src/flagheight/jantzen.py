"""The combinatorial right-hand side of the Jantzen sum formula, as a
formal combination  sum_p (sum_mu c_{p,mu} mu) log p  indexed by primes,
together with its structural identities (vanishing of the lambda0 component
and independence of the parabolic)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .charpoly import formal_character
from .parabolic import ParabolicData, build_parabolic
from .rootsys import RootSystem
from .weyl import longest_element, to_dominant_dotted


def prime_factorization(n: int) -> dict:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass
class LogCharacterCombo:
    """Finite map prime -> (finite map weight -> integer coefficient);
    zero entries are dropped eagerly."""

    terms: dict = field(default_factory=dict)

    def add_character(self, k: int, table: dict, scale: int = 1):
        """Add scale * chi * log k, expanding log k over prime powers."""
        if k <= 1 or not table or scale == 0:
            return
        for p, e in prime_factorization(k).items():
            bucket = self.terms.setdefault(p, {})
            for mu, c in table.items():
                new = bucket.get(mu, 0) + scale * e * c
                if new:
                    bucket[mu] = new
                else:
                    bucket.pop(mu, None)
            if not bucket:
                del self.terms[p]

    def coefficient(self, p: int, mu) -> int:
        return self.terms.get(p, {}).get(tuple(mu), 0)

    def __eq__(self, other):
        return isinstance(other, LogCharacterCombo) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def map_weights(self, fn) -> "LogCharacterCombo":
        out = LogCharacterCombo()
        for p, bucket in self.terms.items():
            nb: dict = {}
            for mu, c in bucket.items():
                key = tuple(fn(mu))
                nb[key] = nb.get(key, 0) + c
            nb = {m: c for m, c in nb.items() if c}
            if nb:
                out.terms[p] = nb
        return out

    def scaled(self, s: int) -> "LogCharacterCombo":
        if s == 0:
            return LogCharacterCombo()
        return LogCharacterCombo(
            {p: {mu: s * c for mu, c in bucket.items()}
             for p, bucket in self.terms.items()})


def psi_signs(pd: ParabolicData, lam):
    """Split Psi into Psi+ (pairing with rho+lam >= 0) and Psi-."""
    rs = pd.rs
    nu = tuple(l + r for l, r in zip(lam, rs.rho))
    plus, minus = [], []
    for alpha in pd.psi:
        (plus if rs._pairing(nu, alpha) >= 0 else minus).append(alpha)
    return plus, minus


def jantzen_rhs(pd: ParabolicData, lam) -> LogCharacterCombo:
    """- sum_{a in Psi+} sum_{k=1}^{<a^vee, rho+lam> - 1} chi_{rho+lam-ka} log k
       + sum_{a in Psi-} sum_{k=1}^{<-a^vee, rho+lam> - 1} chi_{rho+lam+ka} log k

    with chi the signed formal character (zero on singular arguments)."""
    rs = pd.rs
    nu = tuple(l + r for l, r in zip(lam, rs.rho))
    combo = LogCharacterCombo()
    plus, minus = psi_signs(pd, lam)
    for alpha in plus:
        fw = rs.root_to_weight(alpha.coords)
        top = rs._pairing(nu, alpha)
        for k in range(1, top):
            arg = tuple(n - k * f for n, f in zip(nu, fw))
            combo.add_character(k, formal_character(rs, arg), scale=-1)
    for alpha in minus:
        fw = rs.root_to_weight(alpha.coords)
        top = -rs._pairing(nu, alpha)
        for k in range(1, top):
            arg = tuple(n + k * f for n, f in zip(nu, fw))
            combo.add_character(k, formal_character(rs, arg), scale=+1)
    return combo


def lambda0_component(combo: LogCharacterCombo, pd: ParabolicData, lam) -> dict:
    """Coefficient of the Borel-Weil-Bott normal form lam0 per prime; must
    be identically zero for the truncated sums of jantzen_rhs."""
    res = to_dominant_dotted(pd.rs, tuple(lam))
    if res is None:
        raise ValueError(f"rho + {lam} is singular; lambda0 undefined")
    _, lam0 = res
    return {p: combo.terms[p][lam0]
            for p in combo.terms if lam0 in combo.terms[p]}


def verify_parabolic_independence(rs: RootSystem, lam, theta) -> bool:
    """jantzen_rhs over P_theta equals jantzen_rhs over the Borel, for lam
    vanishing on theta (so the line bundle lives on G/P_theta)."""
    theta = frozenset(theta)
    if any(lam[i] != 0 for i in theta):
        raise ValueError(f"{lam} does not vanish on theta={sorted(theta)}")
    return jantzen_rhs(build_parabolic(rs, theta), lam) == \
        jantzen_rhs(build_parabolic(rs, set()), lam)


def verify_w0_transform(rs: RootSystem, lam) -> bool:
    """Check the longest-element reindexing of the sum on the full flag:
    computing the right-hand side with every root alpha replaced by
    -w0(alpha), the weight argument by w0(rho+lam) -/+ k(-w0 alpha) and an
    overall sign (-1)^{l(w0)} reproduces jantzen_rhs exactly."""
    pd = build_parabolic(rs, set())
    w0 = longest_element(rs)
    nu = tuple(l + r for l, r in zip(lam, rs.rho))
    w0nu = w0.act_weight(nu)
    combo = LogCharacterCombo()
    plus, minus = psi_signs(pd, lam)
    for alpha in plus:
        ap = -(w0.act_root(rs, alpha))
        fw = rs.root_to_weight(ap.coords)
        # <ap^vee, w0 nu> = -<a^vee, nu>, so the bound is unchanged
        top = -rs._pairing(w0nu, ap)
        for k in range(1, top):
            arg = tuple(n + k * f for n, f in zip(w0nu, fw))
            combo.add_character(k, formal_character(rs, arg), scale=-w0.sign)
    for alpha in minus:
        ap = -(w0.act_root(rs, alpha))
        fw = rs.root_to_weight(ap.coords)
        top = rs._pairing(w0nu, ap)
        for k in range(1, top):
            arg = tuple(n - k * f for n, f in zip(w0nu, fw))
            combo.add_character(k, formal_character(rs, arg), scale=+w0.sign)
    return combo == jantzen_rhs(pd, lam)
