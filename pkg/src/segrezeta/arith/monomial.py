#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """does exponent vector a divide b?"""
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(b, a):
    """b / a, assuming a divides b"""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomials_of_degree(nvars, degree):
    """all exponent vectors of the given total degree"""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    result = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            result.append((first,) + rest)
    return result


def minimalize_monomials(monomials):
    """removes monomials divisible by another one of the list"""
    unique = sorted(set(monomials), key=lambda m: (sum(m), m))
    result = []
    for m in unique:
        if not any(mono_divides(g, m) for g in result):
            result.append(m)
    return result


class GrevlexOrder:
    """degree reverse lexicographic order"""

    name = "grevlex"

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


    def __eq__(self, other):
        return isinstance(other, GrevlexOrder)


    def __hash__(self):
        return hash(self.name)


    def __repr__(self):
        return self.name


class BlockOrder:
    """elimination order: grevlex on the first `split` variables,
    ties broken by grevlex on the remaining ones.

    Any monomial involving one of the first `split` variables is larger
    than every monomial free of them."""

    name = "block"

    def __init__(self, split):
        self.split = split


    def key(self, exps):
        head = exps[:self.split]
        tail = exps[self.split:]
        return (sum(head), tuple(-e for e in reversed(head)), sum(tail), tuple(-e for e in reversed(tail)))


    def __eq__(self, other):
        return isinstance(other, BlockOrder) and other.split == self.split


    def __hash__(self):
        return hash((self.name, self.split))


    def __repr__(self):
        return "block(" + str(self.split) + ")"
