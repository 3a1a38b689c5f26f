"""
Explicit low-degree syzygies of (l^k, x^k, y^{k+j}, z^{k+j}) and of
(l^{d-3}, x^d, y^d, z^d) in K[x, y, z], l = x + y + z.

Coefficient tuples always list the coefficient of the power of l first,
then those of x, y, z.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..algebra.domain import Witness, WitnessKind
from ..algebra.poly import SparsePolynomial, make_f, make_g, syzygy_degree, verify_syzygy
from ..docs.registry import implements
from ..exceptions import PreconditionError


logger = logging.getLogger(__name__)

X, Y, Z = 0, 1, 2


@dataclass(frozen=True)
class ExplicitSyzygy:
    """Generators, coefficients and the construction that produced them"""

    generators: Tuple[SparsePolynomial, ...]
    coefficients: Tuple[SparsePolynomial, ...]
    construction: str

    @property
    def degree(self) -> int:
        return syzygy_degree(self.generators, self.coefficients)

    def verify(self) -> bool:
        return verify_syzygy(self.generators, self.coefficients)

    def to_witness(self) -> Witness:
        return Witness(
            kind=WitnessKind.SYZYGY,
            degree=self.degree,
            syzygy=tuple(c.to_string() for c in self.coefficients),
            detail=self.construction,
        )


class _Ring:
    """Shorthand for building polynomials in K[x, y, z]"""

    def __init__(self, field: int):
        self.field = field
        self.ell = SparsePolynomial.linear_form(3, field)

    def mono(self, x: int = 0, y: int = 0, z: int = 0, coeff: int = 1) -> SparsePolynomial:
        return SparsePolynomial.monomial((x, y, z), self.field, coeff)

    def var(self, index: int) -> SparsePolynomial:
        return SparsePolynomial.variable(index, 3, self.field)

    def ell_power(self, e: int) -> SparsePolynomial:
        return self.ell ** e

    def f(self, k: int) -> SparsePolynomial:
        return make_f(k, self.field)

    def g(self, k: int) -> SparsePolynomial:
        return make_g(k, self.field)


@implements(
    "Standard non-Koszul syzygy",
    "(f_{k+j}, -f_{k+j}, g_k, (-1)^{k+j+1} g_k) is a non-Koszul syzygy of (l^k, x^k, y^{k+j}, z^{k+j}) over any field",
    ("tests/core/test_syzygies.py::TestStandardSyzygy::test_identity_over_several_fields",),
)
def standard_syzygy(k: int, j: int, field: int = 0) -> ExplicitSyzygy:
    """Syzygy (f_{k+j}, -f_{k+j}, g_k, (-1)^{k+j+1} g_k) of (l^k, x^k, y^{k+j}, z^{k+j}), over any field"""
    if k < 1 or j < 0:
        raise PreconditionError("k >= 1, j >= 0", f"standard syzygy needs k >= 1 and j >= 0, got k={k}, j={j}")
    ring = _Ring(field)
    generators = (ring.ell_power(k), ring.mono(x=k), ring.mono(y=k + j), ring.mono(z=k + j))
    f = ring.f(k + j)
    g = ring.g(k)
    sign = (-1) ** (k + j + 1)
    coefficients = (f, -f, g, g * sign)
    return ExplicitSyzygy(generators, coefficients, f"standard syzygy k={k}, j={j}")


def _rotate(xyz_first: Tuple[SparsePolynomial, ...]) -> Tuple[SparsePolynomial, ...]:
    # built as (x, y, z, l) coefficients; stored with l first
    return (xyz_first[3],) + xyz_first[:3]


def _char_two(d: int, ring: _Ring) -> Optional[Tuple[Tuple[SparsePolynomial, ...], str]]:
    power = d - 1
    if power & (power - 1):
        # some 2^m lies in [d, 2d - 3]; the prime-power window decides instead
        return None
    x, y, z = ring.var(X), ring.var(Y), ring.var(Z)
    coefficients = (y * z, x * z, x * y, x * y * z * ring.ell_power(2))
    return coefficients, f"characteristic 2, d = {power} + 1"


def _char_three(d: int, ring: _Ring) -> Optional[Tuple[Tuple[SparsePolynomial, ...], str]]:
    q, _ = divmod(2 * d, 3)
    low = 1
    while low * 3 <= q:
        low *= 3
    # low = 3^m <= q < 3^{m+1}
    if q == low:
        j = (low + 1) // 2
        ell = ring.ell_power(j - 3)
        diff = (ring.var(X) - ring.var(Z)) ** low
        coefficients = (
            ring.mono(x=j - 1, y=j) * ell,
            diff * ell,
            -(ring.mono(y=j, z=j - 1) * ell),
            -(diff * ring.mono(y=j)),
        )
        return coefficients, f"characteristic 3, quotient {q} = 3^m"
    if q <= 2 * low - 1:
        return None
    k = d - 3 * low
    ell = ring.ell_power(max(0, k - 3))
    coefficients = (
        ring.mono(y=k, z=k) * ell,
        ring.mono(x=k, z=k) * ell,
        ring.mono(x=k, y=k) * ell,
        -(ring.mono(x=k, y=k, z=k) * ring.ell_power(max(0, 3 - k))),
    )
    return coefficients, f"characteristic 3, quotient {q} in [2*3^m, 3^(m+1))"


def _odd_prime(d: int, p: int, ring: _Ring) -> Tuple[Tuple[SparsePolynomial, ...], str]:
    q, r = divmod(2 * d, p)
    if q % 2 == 0:
        h, rho = q // 2, r // 2
        ell = ring.ell_power(max(0, rho - 3))
        fp = ring.f(h) ** p
        gp = ring.g(h) ** p
        coefficients = (
            -(ring.mono(y=rho, z=rho) * ell * fp),
            ring.mono(x=rho, z=rho) * ell * gp,
            ring.mono(x=rho, y=rho) * ell * gp * (-1) ** (h + 1),
            ring.mono(x=rho, y=rho, z=rho) * ring.ell_power(max(0, 3 - rho)) * fp,
        )
        return coefficients, f"even quotient {q}, remainder {r}"

    big_h = (q + 1) // 2
    f_big = ring.f(big_h) ** p
    if r == 1:
        h = big_h - 1
        j = d - h * p
        ell = ring.ell_power(j - 3)
        gp = ring.g(h) ** p
        coefficients = (
            -(ell * f_big),
            ring.mono(x=j, y=j - 1) * ell * gp,
            ring.mono(x=j, z=j - 1) * ell * gp * (-1) ** h,
            ring.mono(x=j) * f_big,
        )
        return coefficients, f"odd quotient {q}, remainder 1"

    j = (p - r) // 2
    g_big = ring.g(big_h) ** p
    coefficients = (
        -(ring.mono(x=j) * f_big),
        ring.mono(y=j) * g_big,
        ring.mono(z=j) * g_big * (-1) ** (big_h + 1),
        ring.ell_power(j + 3) * f_big,
    )
    return coefficients, f"odd quotient {q}, remainder {r}"


@implements(
    "Low-degree syzygies of (d, d, d, d-3)",
    "for 2 <= p < d there is a non-Koszul syzygy of degree <= 2d - 3, explicit outside the characteristic 2 and 3 prime-power cases",
    ("tests/core/test_syzygies.py::TestLowDegreeSyzygies::test_constructions_verify",),
)
def build_low_degree_syzygy(d: int, p: int) -> Optional[ExplicitSyzygy]:
    """Non-Koszul syzygy of degree <= 2d - 3 of (l^{d-3}, x^d, y^d, z^d) over F_p.

    Returns None for the characteristic 2 and 3 cases where a prime power
    p^m lies in [d, 2d - 3]; the failure of WLP for (d, d, d, d - 3) then
    follows from the prime-power window without an explicit relation.
    """
    if d < 6:
        raise PreconditionError("d >= 6", f"explicit syzygy needs d >= 6, got {d}")
    if not 2 <= p < d:
        raise PreconditionError("2 <= p < d", f"explicit syzygy needs a prime below {d}, got {p}")

    ring = _Ring(p)
    if p == 2:
        built = _char_two(d, ring)
    elif p == 3:
        built = _char_three(d, ring)
    else:
        built = _odd_prime(d, p, ring)
    if built is None:
        logger.debug(f"no explicit syzygy for d={d}, p={p}: prime-power window applies")
        return None

    xyz_first, construction = built
    generators = (ring.ell_power(d - 3), ring.mono(x=d), ring.mono(y=d), ring.mono(z=d))
    syzygy = ExplicitSyzygy(generators, _rotate(xyz_first), construction)
    logger.debug(f"built syzygy of degree {syzygy.degree} for d={d}, p={p} ({construction})")
    return syzygy
