#!/usr/bin/env python3
"""Reference values for the complex log-gamma implementation.

Prints 30-digit values of log-gamma at assorted complex points, for
freezing into unit tests.
"""
import mpmath as mp

mp.mp.dps = 30

POINTS = [
    (0.5, 0.0),
    (1.5, -0.5),
    (3.2, 1.7),
    (0.1, 0.0),
    (-2.3, 0.4),
    (-5.5, 0.0),
    (0.5, 8.0),
    (-0.5, -3.25),
    (12.0, 7.0),
    (-7.25, 0.1),
]

for re, im in POINTS:
    z = mp.mpc(re, im)
    lg = mp.loggamma(z)
    print(f"({re}, {im}) -> ({mp.nstr(lg.real, 22)}, {mp.nstr(lg.imag, 22)})")

# Gamma itself at a pole-adjacent point and a large argument, to pin scaling.
for re, im in [(-3.999999, 0.0), (25.0, 0.0)]:
    g = mp.gamma(mp.mpc(re, im))
    print(f"gamma({re}, {im}) -> ({mp.nstr(g.real, 22)}, {mp.nstr(g.imag, 22)})")
