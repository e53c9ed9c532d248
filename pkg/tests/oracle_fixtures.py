"""Psi and nu^2 for selected characteristics, computed independently with sympy.

Each Psi was obtained by solving the third-order equation satisfied by the
product of two solutions, y''' + 3p y'' + (2p^2 + p' + 4q) y' + (4pq + 2q') y = 0,
for an ansatz with leading coefficient z^m1 (z-1)^m2 (z-a)^m3, using sympy's
generic solver; nu^2 by sympy expansion of the Wronskian-squared formula.
Values are frozen here; sympy is not needed at test time.
"""

ORACLE = {
    (1, 2, 1, 0): (
        2,
        '-9*a**2 + 8*a*l*z**3 - 6*a*l*z**2 - 3*a*l*z + 24*a*z**3 - 18*a*z**2 + l**2*z**3 - l**2*z**2 + l*z**4 + 3*l*z**3 - 3*l*z**2 + 3*z**4',
        '576*a**3*l**2 + 3456*a**3*l + 5184*a**3 + 208*a**2*l**3 + 1440*a**2*l**2 + 3024*a**2*l + 1728*a**2 + 25*a*l**4 + 207*a*l**3 + 540*a*l**2 + 432*a*l + l**5 + 10*l**4 + 33*l**3 + 36*l**2',
    ),
    (2, 0, 1, 1): (
        2,
        '-8*a**3 + 8*a**2*l*z - 7*a**2*l + 16*a**2*z**2 - 64*a**2*z + 65*a**2 - a*l**2*z + a*l**2 - 10*a*l*z**2 + 15*a*l*z - 7*a*l - 24*a*z**3 + 86*a*z**2 - 64*a*z - 8*a + l**2*z**2 - l**2*z + 3*l*z**3 - 10*l*z**2 + 8*l*z + 9*z**4 - 24*z**3 + 16*z**2',
        '512*a**4 + 64*a**3*l**2 - 192*a**3*l - 3648*a**3 + 48*a**2*l**3 - 1080*a**2*l**2 + 6096*a**2*l - 3648*a**2 - 15*a*l**4 + 257*a*l**3 - 1080*a*l**2 - 192*a*l + 512*a + l**5 - 15*l**4 + 48*l**3 + 64*l**2',
    ),
    (0, 1, 2, 1): (
        2,
        '-9*a**3 - 8*a**2*l*z**3 + 18*a**2*l*z**2 - 9*a**2*l*z - a**2*l - 24*a**2*z**3 + 54*a**2*z**2 - 3*a**2 - a*l**2*z**3 + 2*a*l**2*z**2 - a*l**2*z + 9*a*l*z**4 - 27*a*l*z**3 + 21*a*l*z**2 - 3*a*l*z + 27*a*z**4 - 72*a*z**3 + 18*a*z**2 + l**2*z**4 - 2*l**2*z**3 + l**2*z**2 + 6*l*z**4 - 9*l*z**3 + 3*l*z**2 + 9*z**4',
        '576*a**3*l**2 + 3456*a**3*l + 5184*a**3 + 208*a**2*l**3 + 1440*a**2*l**2 + 3024*a**2*l + 1728*a**2 + 25*a*l**4 + 207*a*l**3 + 540*a*l**2 + 432*a*l + l**5 + 10*l**4 + 33*l**3 + 36*l**2',
    ),
    (2, 2, 0, 0): (
        2,
        '9*a**2 + 3*a*l*z**2 + 3*a*l*z - 18*a*z**2 + l**2*z**2 + 3*l*z**3 + 3*l*z**2 + 9*z**4',
        '36*a**3*l**2 - 432*a**3*l + 33*a**2*l**3 - 324*a**2*l**2 + 864*a**2*l + 10*a*l**4 - 18*a*l**3 - 324*a*l**2 - 432*a*l + l**5 + 10*l**4 + 33*l**3 + 36*l**2',
    ),
    (1, 0, 0, 2): (
        2,
        '9*a**4 - 10*a**3*l - 18*a**3 + a**2*l**2 + 18*a**2*l*z + 6*a**2*l + 9*a**2 - 2*a*l**2*z - 9*a*l*z**2 - 9*a*l*z + l**2*z**2 + l*z**3 + 3*l*z**2',
        '81*a**4*l - 180*a**3*l**2 - 162*a**3*l + 118*a**2*l**3 + 270*a**2*l**2 + 81*a**2*l - 20*a*l**4 - 118*a*l**3 - 162*a*l**2 + l**5 + 10*l**4 + 33*l**3 + 36*l**2',
    ),
    (2, 1, 0, 0): (
        2,
        '-3*a**2 - 3*a*l*z + a*l - 9*a*z**2 - 3*a + l**2*z + 3*l*z**2 - 3*l*z + 9*z**3 - 9*z**2',
        '-108*a**4 + 9*a**3*l**2 - 54*a**3*l - 567*a**3 + 3*a**2*l**3 + 99*a**2*l**2 - 27*a**2*l - 567*a**2 - 5*a*l**4 - 8*a*l**3 + 99*a*l**2 - 54*a*l - 108*a + l**5 - 5*l**4 + 3*l**3 + 9*l**2',
    ),
    (0, 2, 0, 0): (
        2,
        '9*a**2 + 3*a*l*z**2 + 3*a*l*z + 9*a*z**2 + l**2*z**2 + 3*l*z**2',
        '36*a**3*l**2 + 216*a**3*l + 324*a**3 + 33*a**2*l**3 + 243*a**2*l**2 + 540*a**2*l + 324*a**2 + 10*a*l**4 + 87*a*l**3 + 243*a*l**2 + 216*a*l + l**5 + 10*l**4 + 33*l**3 + 36*l**2',
    ),
    (2, 2, 1, 0): (
        3,
        '-45*a**3 + 40*a**2*l*z**3 - 30*a**2*l*z**2 - 15*a**2*l*z - 9*a**2*l + 45*a**2 + 13*a*l**2*z**3 - 11*a*l**2*z**2 - 3*a*l**2*z + 15*a*l*z**4 - 35*a*l*z**3 + 15*a*l*z**2 + 15*a*l*z + l**3*z**3 - l**3*z**2 + 3*l**2*z**4 - 4*l**2*z**3 + 2*l**2*z**2 + 9*l*z**5 - 15*l*z**4 - 5*l*z**3 + 15*l*z**2',
        '14400*a**5*l**2 + 10960*a**4*l**3 - 18000*a**4*l**2 + 3281*a**3*l**4 - 8415*a**3*l**3 - 1125*a**3*l**2 - 10125*a**3*l + 483*a**2*l**5 - 1278*a**2*l**4 - 3120*a**2*l**3 - 450*a**2*l**2 + 10125*a**2*l + 35*a*l**6 - 63*a*l**5 - 753*a*l**4 + 515*a*l**3 + 2250*a*l**2 + l**7 - 42*l**5 - 44*l**4 + 465*l**3 + 900*l**2',
    ),
}
