#!/usr/bin/env python3
"""Reference values for the discrete hypergeometric wave functions.

psi(a, x; z, z', xi) =
    sqrt(G(x+z+1/2) G(x+z'+1/2) / (G(z-a+1/2) G(z'-a+1/2)))
    * xi^((x+a)/2) * (1-xi)^((z+z')/2 - a)
    * F(-z+a+1/2, -z'+a+1/2; x+a+1; xi/(xi-1)) / G(x+a+1)

Evaluated with 40-digit arithmetic through the transformation
F(A,B;C;xi/(xi-1)) = (1-xi)^A F(A, C-B; C; xi), whose right side is summed
as the regularized series (entire in C).  Where C >= 1 the value is
cross-checked against mpmath's own hyp2f1 continuation.
"""
import mpmath as mp

mp.mp.dps = 40


def reg2f1(a, b, c, x, terms=500):
    s = mp.mpc(0)
    pa = mp.mpc(1)
    for k in range(terms):
        s += pa * mp.rgamma(c + k) * x**k
        pa *= (a + k) * (b + k) / (k + 1)
    return s


def psi(a, x, z, zp, xi):
    A = -z + a + mp.mpf("0.5")
    C = x + a + 1
    CB = x + zp + mp.mpf("0.5")  # C - B
    prod = mp.gamma(x + z + mp.mpf("0.5")) * mp.gamma(x + zp + mp.mpf("0.5")) \
        / (mp.gamma(z - a + mp.mpf("0.5")) * mp.gamma(zp - a + mp.mpf("0.5")))
    assert abs(mp.im(prod)) < mp.mpf("1e-30") * abs(prod)
    root = mp.sqrt(mp.re(prod))
    val = root * xi ** ((x + a) / 2) * (1 - xi) ** ((z + zp) / 2 - a) \
        * (1 - xi) ** A * reg2f1(A, CB, C, xi)
    return val


CASES = [
    # (z, z', xi, [(a, x), ...])
    (mp.mpc(1, 1), mp.mpc(1, -1), mp.mpf("0.3"),
     [(mp.mpf("0.5"), mp.mpf("0.5")), (mp.mpf("-1.5"), mp.mpf("2.5")),
      (mp.mpf("2.5"), mp.mpf("-3.5")), (mp.mpf("-0.5"), mp.mpf("-0.5")),
      (mp.mpf("3.5"), mp.mpf("4.5"))]),
    (mp.mpf("0.3"), mp.mpf("0.8"), mp.mpf("0.45"),
     [(mp.mpf("0.5"), mp.mpf("0.5")), (mp.mpf("-2.5"), mp.mpf("1.5")),
      (mp.mpf("1.5"), mp.mpf("-4.5"))]),
    (mp.mpf("3"), mp.mpf("3.7"), mp.mpf("0.5"),
     [(mp.mpf("2.5"), mp.mpf("-2.5")), (mp.mpf("0.5"), mp.mpf("1.5")),
      (mp.mpf("-3.5"), mp.mpf("0.5"))]),
]

for z, zp, xi, pts in CASES:
    for a, x in pts:
        v = psi(a, x, z, zp, xi)
        print(
            f"z=({mp.nstr(mp.re(z),6)},{mp.nstr(mp.im(z),6)}) xi={mp.nstr(xi,6)} "
            f"a={mp.nstr(a,6)} x={mp.nstr(x,6)} -> "
            f"({mp.nstr(mp.re(v), 22)}, im {mp.nstr(mp.im(v), 5)})"
        )

# Cross-check against mpmath's hyp2f1 analytic continuation where C >= 1.
print("cross-checks (should be ~1e-38):")
for z, zp, xi, pts in CASES:
    for a, x in pts:
        C = x + a + 1
        if C < 1 or int(C) != C:
            continue
        A = -z + a + mp.mpf("0.5")
        B = -zp + a + mp.mpf("0.5")
        w = xi / (xi - 1)
        direct = mp.hyp2f1(A, B, C, w) * mp.rgamma(C)
        trans = (1 - xi) ** A * reg2f1(A, x + zp + mp.mpf("0.5"), C, xi)
        print(" ", mp.nstr(abs(direct - trans), 5))

# Difference-equation check: D psi_a = a (1-xi) psi_a at a sample point.
z, zp, xi = mp.mpc(1, 1), mp.mpc(1, -1), mp.mpf("0.3")
a, x = mp.mpf("1.5"), mp.mpf("0.5")
lhs = mp.sqrt(xi * (z + x + mp.mpf("0.5")) * (zp + x + mp.mpf("0.5"))).real * psi(a, x + 1, z, zp, xi) \
    + mp.sqrt(xi * (z + x - mp.mpf("0.5")) * (zp + x - mp.mpf("0.5"))).real * psi(a, x - 1, z, zp, xi) \
    - (x + xi * (z + zp + x)) * psi(a, x, z, zp, xi)
rhs = a * (1 - xi) * psi(a, x, z, zp, xi)
print("difference-equation residual:", mp.nstr(abs(lhs - rhs), 5))
