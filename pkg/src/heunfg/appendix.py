"""Reference table of closed-form examples: Psi and nu^2 for fifteen small
characteristic tuples with symbolic a, in canonical text form."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra.multipoly import MultiPoly
from .curve import nu_squared
from .psi import build_psi

# Psi, nu^2 as printed in the reference table (canonical text of the expansion).
PRINTED = {
    (0, 0, 0, 0): (
        '1',
        'l',
    ),
    (1, 0, 0, 0): (
        'z + l - a - 1',
        'l^3 - 2*l^2*a + l*a^2 - 2*l^2 + 3*l*a - a^2 + l - a',
    ),
    (0, 1, 0, 0): (
        'z*l + a',
        'l^3 + l^2*a + l^2 + l*a',
    ),
    (1, 1, 0, 0): (
        'z^2 + z*l + a',
        'l^3 + l^2*a + l^2 - 4*l*a - 4*a^2 - 4*a',
    ),
    (0, 0, 1, 1): (
        'z^2*l + z^2*a - z*l*a + z^2 - z*l - 4*z*a + l*a + a^2 + a',
        'l^3 + l^2*a + l^2 - 4*l*a - 4*a^2 - 4*a',
    ),
    (1, 1, 1, 0): (
        'z^3*l + z^2*l^2 + 3*z^2*l*a - 3*z^2*l - z*l^2 - 3*z*l*a + 3*z*l - l*a - 3*a^2 + 3*a',
        'l^5 + 10*l^4*a + 33*l^3*a^2 + 36*l^2*a^3 - 5*l^4 - 33*l^3*a - 54*l^2*a^2 + 3*l^3 - 27*l*a^2 + 9*l^2 + 27*l*a',
    ),
    (1, 1, 1, 1): (
        'z^4 + z^3*l - z^2*l*a - z^2*l - 2*z^2*a + z*l*a + a^2',
        'l^3 + 4*l^2*a + 4*l^2 + 16*l*a',
    ),
    (2, 0, 0, 0): (
        '9*z^2 + 3*z*l - 12*z*a + l^2 - 5*l*a + 4*a^2 - 12*z - 5*l + 17*a + 4',
        'l^5 - 10*l^4*a + 33*l^3*a^2 - 40*l^2*a^3 + 16*l*a^4 - 10*l^4 + 87*l^3*a - 237*l^2*a^2 + 208*l*a^3 - 48*a^4 + 33*l^3 - 237*l^2*a + 492*l*a^2 - 252*a^3 - 40*l^2 + 208*l*a - 252*a^2 + 16*l - 48*a',
    ),
    (0, 2, 0, 0): (
        '9*z^3 + 3*z^2*l - 9*z^2*a + z*l^2 - 3*z*l*a - 9*z^2 - 3*z*l + l*a - 3*a^2 - 3*a',
        'l^5 + 10*l^4*a + 33*l^3*a^2 + 36*l^2*a^3 + 10*l^4 + 87*l^3*a + 243*l^2*a^2 + 216*l*a^3 + 33*l^3 + 243*l^2*a + 540*l*a^2 + 324*a^3 + 36*l^2 + 216*l*a + 324*a^2',
    ),
    (2, 1, 0, 0): (
        'z^2*l^2 + 3*z^2*l*a + 3*z^2*l + 9*z^2*a + 3*z*l*a + 9*a^2',
        'l^5 - 5*l^4*a + 3*l^3*a^2 + 9*l^2*a^3 - 5*l^4 - 8*l^3*a + 99*l^2*a^2 - 54*l*a^3 - 108*a^4 + 3*l^3 + 99*l^2*a - 27*l*a^2 - 567*a^3 + 9*l^2 - 54*l*a - 567*a^2 - 108*a',
    ),
    (0, 0, 2, 1): (
        'z^3*l^2 + 4*z^3*l*a - z^2*l^2*a - 3*z^2*l*a^2 - 12*z^3*a - 2*z^2*l^2 - 12*z^2*l*a + 9*z^2*a^2 + 2*z*l^2*a + 9*z*l*a^2 + 3*z^2*l + 18*z^2*a + z*l^2 + 6*z*l*a - l^2*a - 6*l*a^2 - 9*a^3 + 9*z^2 - 3*z*l - 36*z*a + 2*l*a + 18*a^2 + 3*a',
        'l^5 + 10*l^4*a + 33*l^3*a^2 + 36*l^2*a^3 - 5*l^4 - 68*l^3*a - 243*l^2*a^2 - 216*l*a^3 + 3*l^3 + 126*l^2*a + 648*l*a^2 + 324*a^3 + 9*l^2 - 648*a^2 - 108*a',
    ),
    (2, 1, 1, 0): (
        '9*z^4 + 3*z^3*l + z^2*l^2 + 3*z^2*l*a - 24*z^3 - 10*z^2*l - 6*z^2*a - z*l^2 - 3*z*l*a + 16*z^2 + 8*z*l - l*a - 3*a^2 + 8*a',
        'l^5 + 10*l^4*a + 33*l^3*a^2 + 36*l^2*a^3 - 15*l^4 - 113*l^3*a - 252*l^2*a^2 - 144*l*a^3 + 48*l^3 + 312*l^2*a + 720*l*a^2 + 576*a^3 + 64*l^2 - 320*l*a - 1344*a^2 - 512*a',
    ),
    (0, 1, 1, 2): (
        'z^4*l^2 + 6*z^4*l*a + 9*z^4*a^2 - 2*z^3*l^2*a - 9*z^3*l*a^2 + z^2*l^2*a^2 + 3*z^2*l*a^3 + 9*z^4*l + 27*z^4*a - z^3*l^2 - 27*z^3*l*a - 72*z^3*a^2 + 2*z^2*l^2*a + 21*z^2*l*a^2 + 18*z^2*a^3 - z*l^2*a^2 - 3*z*l*a^3 - 8*z^3*l - 24*z^3*a + 18*z^2*l*a + 54*z^2*a^2 - 9*z*l*a^2 - l*a^3 - 3*a^4 - 9*a^3',
        'l^5 + 10*l^4*a + 33*l^3*a^2 + 36*l^2*a^3 + 25*l^4 + 207*l^3*a + 540*l^2*a^2 + 432*l*a^3 + 208*l^3 + 1440*l^2*a + 3024*l*a^2 + 1728*a^3 + 576*l^2 + 3456*l*a + 5184*a^2',
    ),
    (2, 1, 1, 1): (
        '9*z^5*l + 3*z^4*l^2 - 15*z^4*l*a + z^3*l^3 - 4*z^3*l^2*a - 5*z^3*l*a^2 - z^2*l^3*a + 2*z^2*l^2*a^2 + 15*z^2*l*a^3 - 15*z^4*l - 4*z^3*l^2 + 35*z^3*l*a - z^2*l^3 + 4*z^2*l^2*a - 15*z^2*l*a^2 + z*l^3*a - 2*z*l^2*a^2 - 15*z*l*a^3 - 5*z^3*l + 2*z^2*l^2 - 15*z^2*l*a - 2*z*l^2*a + 30*z*l*a^2 + l^2*a^2 - 2*l*a^3 - 15*a^4 + 15*z^2*l - 15*z*l*a - 2*l*a^2 + 30*a^3 - 15*a^2',
        'l^7 - 42*l^5*a^2 - 44*l^4*a^3 + 465*l^3*a^4 + 900*l^2*a^5 + 42*l^5*a + 66*l^4*a^2 - 930*l^3*a^3 - 2250*l^2*a^4 - 42*l^5 + 66*l^4*a + 1395*l^3*a^2 + 900*l^2*a^3 - 3375*l*a^4 - 44*l^4 - 930*l^3*a + 900*l^2*a^2 + 6750*l*a^3 + 465*l^3 - 2250*l^2*a - 3375*l*a^2 + 900*l^2',
    ),
    (3, 0, 0, 0): (
        '225*z^3 + 45*z^2*l - 405*z^2*a + 6*z*l^2 - 78*z*l*a + 216*z*a^2 + l^3 - 14*l^2*a + 49*l*a^2 - 36*a^3 - 405*z^2 - 78*z*l + 657*z*a - 14*l^2 + 158*l*a - 348*a^2 + 216*z + 49*l - 348*a - 36',
        'l^7 - 28*l^6*a + 294*l^5*a^2 - 1444*l^4*a^3 + 3409*l^3*a^4 - 3528*l^2*a^5 + 1296*l*a^6 - 28*l^6 + 714*l^5*a - 6654*l^4*a^2 + 27838*l^3*a^3 - 52542*l^2*a^4 + 38448*l*a^5 - 7776*a^6 + 294*l^5 - 6654*l^4*a + 53043*l^3*a^2 - 178056*l^2*a^3 + 242433*l*a^4 - 98820*a^5 - 1444*l^4 + 27838*l^3*a - 178056*l^2*a^2 + 424062*l*a^3 - 311580*a^4 + 3409*l^3 - 52542*l^2*a + 242433*l*a^2 - 311580*a^3 - 3528*l^2 + 38448*l*a - 98820*a^2 + 1296*l - 7776*a',
    ),
}

# The printed Psi entries of (0,2,0,0) and (2,1,0,0) are interchanged: each
# printed polynomial has the leading coefficient z^m1 (z-1)^m2 (z-a)^m3 of the
# other tuple.  The corrected entries solve the product equation and give
# the printed nu^2 of their own tuple.
ERRATA = {
    (0, 2, 0, 0): PRINTED[(2, 1, 0, 0)][0],
    (2, 1, 0, 0): PRINTED[(0, 2, 0, 0)][0],
}


@dataclass(frozen=True)
class CaseResult:
    characteristics: tuple
    psi: str
    nu2: str
    psi_matches_printed: bool
    nu2_matches_printed: bool
    psi_matches_erratum: bool

    @property
    def exact(self) -> bool:
        return self.psi_matches_printed and self.nu2_matches_printed

    @property
    def accepted(self) -> bool:
        """Exact match, or a match once the known erratum is applied."""
        return self.nu2_matches_printed and (self.psi_matches_printed or self.psi_matches_erratum)


def check_case(m) -> CaseResult:
    m = tuple(m)
    psi = build_psi(m)
    nu2 = nu_squared(psi).nu2
    printed_psi, printed_nu2 = PRINTED[m]
    got = psi.as_multipoly()
    return CaseResult(
        characteristics=m,
        psi=got.to_text(),
        nu2=nu2.to_text(),
        psi_matches_printed=got == MultiPoly.parse(printed_psi),
        nu2_matches_printed=nu2 == MultiPoly.parse(printed_nu2),
        psi_matches_erratum=m in ERRATA and got == MultiPoly.parse(ERRATA[m]),
    )


def verify_appendix() -> list:
    return [check_case(m) for m in PRINTED]
