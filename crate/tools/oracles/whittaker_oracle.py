#!/usr/bin/env python3
"""Reference values for the scaled Whittaker functions

    w_a(u; z, z') = (G(z-a+1/2) G(z'-a+1/2))^(-1/2) u^(-1/2)
                    * WhittakerW((z+z')/2 - a, (z-z')/2, u),

computed with 30-digit arithmetic from mpmath's whitw.
"""
import mpmath as mp

mp.mp.dps = 30

CASES = [
    # (z, z', a, u)
    (mp.mpc(1, 1), mp.mpc(1, -1), mp.mpf("0.5"), mp.mpf("0.8")),
    (mp.mpc(1, 1), mp.mpc(1, -1), mp.mpf("-1.5"), mp.mpf("2.3")),
    (mp.mpc(1, 1), mp.mpc(1, -1), mp.mpf("2.5"), mp.mpf("0.15")),
    (mp.mpf("0.3"), mp.mpf("0.8"), mp.mpf("0.5"), mp.mpf("1.1")),
    (mp.mpf("0.3"), mp.mpf("0.8"), mp.mpf("-2.5"), mp.mpf("0.4")),
    (mp.mpf("-0.3"), mp.mpf("-0.8"), mp.mpf("1.5"), mp.mpf("2.0")),
    (mp.mpc(-1, -1), mp.mpc(-1, 1), mp.mpf("-0.5"), mp.mpf("0.6")),
]

for z, zp, a, u in CASES:
    kappa = (z + zp) / 2 - a
    mu = (z - zp) / 2
    prod = mp.gamma(z - a + mp.mpf("0.5")) * mp.gamma(zp - a + mp.mpf("0.5"))
    assert abs(mp.im(prod)) < mp.mpf("1e-20") * abs(prod), prod
    w = mp.whitw(kappa, mu, u) / (mp.sqrt(mp.re(prod)) * mp.sqrt(u))
    print(
        f"z=({mp.nstr(mp.re(z),6)},{mp.nstr(mp.im(z),6)}) "
        f"z'=({mp.nstr(mp.re(zp),6)},{mp.nstr(mp.im(zp),6)}) "
        f"a={mp.nstr(a,6)} u={mp.nstr(u,6)} -> "
        f"({mp.nstr(mp.re(w), 22)}, im {mp.nstr(mp.im(w), 5)})"
    )
