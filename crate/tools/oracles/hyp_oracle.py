#!/usr/bin/env python3
"""Reference values for the regularized Gauss series Σ (a)_k (b)_k x^k / (Γ(c+k) k!).

Computed with 40-digit arithmetic directly from the defining sum, which is
well-defined for every complex c (including nonpositive integers, where the
leading terms vanish through the reciprocal gamma).
"""
import mpmath as mp

mp.mp.dps = 40


def reg2f1(a, b, c, x, terms=400):
    s = mp.mpc(0)
    pa = mp.mpc(1)  # (a)_k (b)_k / k!
    for k in range(terms):
        s += pa * mp.rgamma(c + k) * x**k
        pa *= (a + k) * (b + k) / (k + 1)
    return s


CASES = [
    # generic complex parameters, moderate argument
    (mp.mpc(0.5, -1.0), mp.mpc(-0.5, 1.0), mp.mpc(2.0, 0.0), mp.mpc(0.3, 0.0)),
    (mp.mpc(1.2, 0.4), mp.mpc(0.7, -0.3), mp.mpc(-2.0, 0.0), mp.mpc(0.45, 0.0)),
    (mp.mpc(-3.0, 0.0), mp.mpc(1.1, 0.2), mp.mpc(0.5, 0.0), mp.mpc(0.8, 0.0)),
    (mp.mpc(0.25, 0.0), mp.mpc(0.75, 0.0), mp.mpc(-5.0, 0.0), mp.mpc(0.6, 0.0)),
    (mp.mpc(2.3, 1.1), mp.mpc(-1.4, 0.6), mp.mpc(3.5, -0.2), mp.mpc(0.15, 0.25)),
    (mp.mpc(0.9, 0.0), mp.mpc(1.8, 0.0), mp.mpc(0.0, 0.0), mp.mpc(0.5, 0.0)),
]

for a, b, c, x in CASES:
    v = reg2f1(a, b, c, x)
    print(
        f"a=({mp.nstr(a.real,6)},{mp.nstr(a.imag,6)}) b=({mp.nstr(b.real,6)},{mp.nstr(b.imag,6)}) "
        f"c=({mp.nstr(c.real,6)},{mp.nstr(c.imag,6)}) x=({mp.nstr(x.real,6)},{mp.nstr(x.imag,6)}) "
        f"-> ({mp.nstr(v.real, 22)}, {mp.nstr(v.imag, 22)})"
    )

# Cross-check against mpmath's hyp2f1 where c is regular.
a, b, c, x = mp.mpc(0.5, -1.0), mp.mpc(-0.5, 1.0), mp.mpc(2.0, 0.0), mp.mpc(0.3, 0.0)
direct = mp.hyp2f1(a, b, c, x) * mp.rgamma(c)
print("consistency:", mp.nstr(abs(direct - reg2f1(a, b, c, x)), 5))
