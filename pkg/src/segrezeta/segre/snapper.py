#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import logging
import math
from dataclasses import dataclass

import sympy

from segrezeta.core.errors import NotStabilized, PreconditionViolation
from segrezeta.groebner.operations import graded_dim, ideal_power, saturate_irrelevant
from segrezeta.vogel.projectivedegrees import projective_degrees

M, N = sympy.symbols("m n")


@dataclass(frozen=True)
class SnapperFit:
    """polynomial fit of h^0(I^n (d(m+n))) over a grid of twists"""

    grid: dict
    polynomial: sympy.Expr
    top_coefficients: tuple
    implied_degrees: tuple
    expected_degrees: tuple
    section_degree: int
    m_values: tuple
    n_values: tuple

    @property
    def agrees(self):
        return self.implied_degrees == self.expected_degrees


    def to_dict(self):
        return {
            "grid": [[m, n, v] for (m, n), v in sorted(self.grid.items())],
            "polynomial": str(self.polynomial),
            "top_coefficients": [str(c) for c in self.top_coefficients],
            "implied_degrees": list(self.implied_degrees),
            "expected_degrees": list(self.expected_degrees),
            "section_degree": self.section_degree,
            "agrees": self.agrees,
        }


def _grid(ideal, d, m_values, n_values, saturation):
    saturated = {n: saturate_irrelevant(ideal_power(ideal, n), saturation) for n in n_values}
    grid = {}
    for n in n_values:
        for m in m_values:
            grid[(m, n)] = graded_dim(saturated[n], d * (m + n))
        logging.debug("snapper grid row n = " + str(n) + " done")
    return grid


def _exact(value):
    value = sympy.Rational(value)
    return int(value) if value.q == 1 else str(value)


def _fit(grid, total_degree):
    """the polynomial of total degree <= total_degree through all grid values,
    None when the grid values are not polynomial"""
    exponents = [(a, b) for a in range(total_degree + 1) for b in range(total_degree + 1 - a)]
    points = sorted(grid)
    matrix = sympy.Matrix([[sympy.Integer(m) ** a * sympy.Integer(n) ** b for a, b in exponents] for m, n in points])
    values = sympy.Matrix([grid[p] for p in points])
    try:
        solution, params = matrix.gauss_jordan_solve(values)
    except ValueError:
        return None
    if params.shape[0] > 0:
        raise PreconditionViolation("grid too small to determine a polynomial of degree " + str(total_degree))
    return sum(solution[k] * M ** a * N ** b for k, (a, b) in enumerate(exponents))


def snapper_fit(ideal, m_start=2, n_start=1, points=4, trials=5, seed=0, saturation="quotient"):
    """fits the Snapper polynomial of V(I) with L = O(d) and checks its top
    part against the projective degrees: i!(n-i)! c_i = d^(n-i) g_i, where
    c_i is the coefficient of m^(n-i) n^i.

    @param m_start first twist m of the grid
    @param n_start first ideal power n of the grid, at least 1
    @param points number of consecutive values per direction, at least dim + 2
    @raise NotStabilized when the grid is not polynomial, also after doubling the offsets
    """
    ambient = ideal.ring.nvars - 1
    if points < ambient + 2:
        raise PreconditionViolation("the grid needs at least " + str(ambient + 2) + " values per direction, got " + str(points))
    if n_start < 1 or m_start < 0:
        raise PreconditionViolation("grid offsets must satisfy m >= 0 and n >= 1")
    if not ideal.is_homogeneous() or ideal.is_zero():
        raise PreconditionViolation("Snapper polynomial needs a nonzero homogeneous ideal: " + str(ideal))

    g = projective_degrees(ideal, trials, seed, saturation=saturation)
    d = g.section_degree

    polynomial = None
    m, n = m_start, n_start
    for _ in range(2):
        m_values = tuple(range(m, m + points))
        n_values = tuple(range(n, n + points))
        grid = _grid(ideal, d, m_values, n_values, saturation)
        polynomial = _fit(grid, ambient)
        if polynomial is not None:
            break
        logging.warning("grid from m = " + str(m_values[0]) + ", n = " + str(n_values[0]) + " is not polynomial")
        m, n = max(1, 2 * m), 2 * n
    if polynomial is None:
        raise NotStabilized("Hilbert function grid is not polynomial after enlarging the twists",
                            m_start=m_start, n_start=n_start, points=points)

    poly = sympy.Poly(polynomial, M, N)
    top = tuple(poly.coeff_monomial(M ** (ambient - i) * N ** i) for i in range(ambient + 1))
    implied = tuple(_exact(math.factorial(i) * math.factorial(ambient - i) * c) for i, c in enumerate(top))
    expected = tuple(d ** (ambient - i) * g.g[i] for i in range(ambient + 1))
    if implied != expected:
        logging.warning("Snapper degrees " + str(list(implied)) + " differ from projective degrees " + str(list(expected)))
    return SnapperFit(grid, sympy.expand(polynomial), top, implied, expected, d, m_values, n_values)
