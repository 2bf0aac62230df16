# group/law.py
"""
Coordinate group law of the centrally extended Heisenberg group.

g(u, v, w, y) stands for exp(u a_dag) exp(v h) exp(w a) exp(y E). With
g1 = (alpha, beta, gamma, delta) and g2 = (A, B, C, D):

    g1 g2 = g(alpha + A, beta + B + gamma A, gamma + C,
              (gamma A^2 / 2 + beta A) z + (gamma^2 A / 2 + gamma B) conj(z) + delta + D)

Elements with real u, v, w form a subgroup; y stays complex.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from algebra.lie_core import AlgebraElement, StructureConstants, bracket
from core.errors import DomainError
from core.utils import as_complex


@dataclass(frozen=True)
class GroupElement:
    u: complex    # a_dag coordinate
    v: complex    # h coordinate
    w: complex    # a coordinate
    y: complex    # E coordinate
    real_subgroup: bool = False

    def __post_init__(self):
        for name in ("u", "v", "w", "y"):
            object.__setattr__(self, name, as_complex(getattr(self, name)))
        if self.real_subgroup and any(c.imag != 0 for c in (self.u, self.v, self.w)):
            raise DomainError("real-subgroup elements need real u, v, w")

    @classmethod
    def real(cls, u: float, v: float, w: float, y: complex = 0j) -> "GroupElement":
        return cls(u, v, w, y, real_subgroup=True)

    def coords(self) -> Tuple[complex, complex, complex, complex]:
        return self.u, self.v, self.w, self.y

    def distance(self, other: "GroupElement") -> float:
        """Largest coordinatewise |difference|."""
        return float(max(abs(p - q) for p, q in zip(self.coords(), other.coords())))


class WeylCase(Enum):
    A_H = "a_h"         # exp(lam a) exp(mu h) = exp(mu h) exp(lam a) exp(lam mu conj(z))
    H_ADAG = "h_adag"   # exp(mu h) exp(lam a_dag) = exp(lam a_dag) exp(mu h) exp(lam mu z)


@dataclass(frozen=True)
class OrderedWord:
    """Exponents of exp(a_dag_exp a_dag) exp(a_exp a) exp(h_exp h) exp(e_exp E).

    This is the word produced by moving exp(lam a) to the right of exp(mu a_dag);
    h comes after a in it.
    """
    a_dag_exp: complex
    h_exp: complex
    a_exp: complex
    e_exp: complex

    def as_tuple(self) -> Tuple[complex, complex, complex, complex]:
        """(a_dag, h, a, E) exponents."""
        return self.a_dag_exp, self.h_exp, self.a_exp, self.e_exp


def identity_element() -> GroupElement:
    return GroupElement.real(0.0, 0.0, 0.0, 0j)


def compose(g1: GroupElement, g2: GroupElement, z: complex) -> GroupElement:
    z = complex(z)
    alpha, beta, gamma, delta = g1.coords()
    A, B, C, D = g2.coords()
    central = ((gamma * A ** 2 / 2 + beta * A) * z
               + (gamma ** 2 * A / 2 + gamma * B) * np.conj(z) + delta + D)
    return GroupElement(
        u=alpha + A,
        v=beta + B + gamma * A,
        w=gamma + C,
        y=complex(central),
        real_subgroup=g1.real_subgroup and g2.real_subgroup,
    )


def inverse(g: GroupElement, z: complex) -> GroupElement:
    """Two-sided inverse from solving compose(g, g^-1) = identity."""
    z = complex(z)
    alpha, beta, gamma, delta = g.coords()
    A = -alpha
    C = -gamma
    B = -beta + gamma * alpha
    D = -delta - (gamma * A ** 2 / 2 + beta * A) * z - (gamma ** 2 * A / 2 + gamma * B) * np.conj(z)
    return GroupElement(u=A, v=B, w=C, y=complex(D), real_subgroup=g.real_subgroup)


def power(g: GroupElement, n: int, z: complex) -> GroupElement:
    base = g if n >= 0 else inverse(g, z)
    result = identity_element()
    for _ in range(abs(n)):
        result = compose(result, base, z)
    return result


def group_commutator(g1: GroupElement, g2: GroupElement, z: complex) -> GroupElement:
    """g1 g2 g1^-1 g2^-1.

    The result has u = w = 0 and v = gamma A - alpha C, so it lies in exp(span{h, E})
    and is central only when that v vanishes.
    """
    return compose(compose(g1, g2, z), compose(inverse(g1, z), inverse(g2, z), z), z)


def heisenberg_compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Group law with the z-dependent terms dropped (the plain Heisenberg group)."""
    alpha, beta, gamma, delta = g1.coords()
    A, B, C, D = g2.coords()
    return GroupElement(alpha + A, beta + B + gamma * A, gamma + C, delta + D,
                        real_subgroup=g1.real_subgroup and g2.real_subgroup)


# =============================================================================
# Reordering identities
# =============================================================================

def reorder_a_adag(lam: complex, mu: complex, z: complex) -> OrderedWord:
    """exp(lam a) exp(mu a_dag) = exp(mu a_dag) exp(lam a) exp(lam mu h) exp(lam mu (mu z - lam conj(z)) / 2)."""
    lam, mu, z = complex(lam), complex(mu), complex(z)
    return OrderedWord(
        a_dag_exp=mu,
        h_exp=lam * mu,
        a_exp=lam,
        e_exp=lam * mu * (mu * z - lam * np.conj(z)) / 2,
    )


def reorder_weyl(lam: complex, mu: complex, z: complex, which: WeylCase) -> complex:
    """Central exponent picked up by swapping exp(lam a), exp(mu h) or exp(mu h), exp(lam a_dag)."""
    which = WeylCase(which)
    lam, mu, z = complex(lam), complex(mu), complex(z)
    if which is WeylCase.A_H:
        return lam * mu * np.conj(z)
    return lam * mu * z


def zassenhaus_special(x: AlgebraElement, y: AlgebraElement,
                       sc: StructureConstants) -> Tuple[AlgebraElement, AlgebraElement]:
    """Corrections in exp(X + Y) = exp(X) exp(Y) exp(C2) exp(C3).

    C2 = -[X, Y] / 2 and C3 = (2 [Y, [X, Y]] + [X, [X, Y]]) / 6; C3 is central
    and nothing further appears because fourfold brackets vanish.
    """
    xy = bracket(x, y, sc)
    c2 = -0.5 * xy
    c3 = (2 * bracket(y, xy, sc) + bracket(x, xy, sc)) * (1 / 6)
    return c2, c3
