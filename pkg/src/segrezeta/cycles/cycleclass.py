#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from dataclasses import dataclass

from segrezeta.arith.binomial import binomial_conv
from segrezeta.core.errors import PreconditionViolation


@dataclass(frozen=True)
class CycleClass:
    """degrees of a cycle class pushed forward to P^n, indexed by codimension.

    degs[i] is the O(1)-degree of the part of codimension i."""

    ambient_dim: int
    degs: tuple

    def __post_init__(self):
        object.__setattr__(self, "degs", tuple(int(v) for v in self.degs))
        if len(self.degs) != self.ambient_dim + 1:
            raise PreconditionViolation("a cycle class on P^" + str(self.ambient_dim)
                                        + " needs " + str(self.ambient_dim + 1) + " entries, got " + str(len(self.degs)))


    @classmethod
    def of(cls, degs):
        return cls(len(degs) - 1, tuple(degs))


    def __getitem__(self, i):
        return self.degs[i]


    def __len__(self):
        return len(self.degs)


    def to_list(self):
        return list(self.degs)


def _check_degree(d):
    if d < 1:
        raise PreconditionViolation("section degree must be >= 1, got " + str(d))


def vogel_to_segre(nu, d):
    """Segre degrees from Vogel degrees of sections of O(d):
    s_i = sum_j binom(i-1, j-1) (-1)^(i-j) d^(i-j) nu_j"""
    _check_degree(d)
    s = []
    for i in range(len(nu)):
        s.append(sum(binomial_conv(i - 1, j - 1) * (-d) ** (i - j) * nu[j] for j in range(i + 1)))
    return CycleClass(nu.ambient_dim, s)


def segre_to_vogel(s, d):
    """Vogel degrees from Segre degrees: nu_i = sum_j binom(i-1, j-1) d^(i-j) s_j"""
    _check_degree(d)
    nu = []
    for i in range(len(s)):
        nu.append(sum(binomial_conv(i - 1, j - 1) * d ** (i - j) * s[j] for j in range(i + 1)))
    return CycleClass(s.ambient_dim, nu)


def scale_degree(c, p):
    """degrees with respect to O(p): the entry of dimension n - i is multiplied by p^(n-i)"""
    if p < 1:
        raise PreconditionViolation("twist must be >= 1, got " + str(p))
    n = c.ambient_dim
    return CycleClass(n, [v * p ** (n - i) for i, v in enumerate(c.degs)])


degrees_in_twist = scale_degree


def divisor_segre_series(k, order):
    """coefficients of E, E^2, ..., E^order in kE / (1 + kE)"""
    if order < 1:
        raise PreconditionViolation("truncation order must be >= 1, got " + str(order))
    return [(-1) ** (i - 1) * k ** i for i in range(1, order + 1)]


def polar_degrees_from_vogel(nu, d):
    """projective degrees g recovered from Vogel degrees by
    g_0 = 1 - nu_0 and g_i = d * g_(i-1) - nu_i"""
    _check_degree(d)
    g = [1 - nu[0]]
    for i in range(1, len(nu)):
        g.append(d * g[i - 1] - nu[i])
    return g
