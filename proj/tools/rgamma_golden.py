"""Reference Taylor coefficients of 1/Gamma(l + 1 + eps) at 50 digits.

Derivatives come from mpmath's finite-difference differentiation at high
working precision, independent of the library's polygamma route.

Usage: python3 tools/rgamma_golden.py > tests/data/rgamma_golden.json
"""
import json

import mpmath as mp

mp.mp.dps = 50
ORDER = 6
POINTS = [("-3", mp.mpf(-3)), ("-2", mp.mpf(-2)), ("-1", mp.mpf(-1)), ("0", mp.mpf(0)),
          ("1", mp.mpf(1)), ("2", mp.mpf(2)), ("3", mp.mpf(3)),
          ("-11/4", mp.mpf(-3) + mp.mpf(1) / 4), ("1/3", mp.mpf(1) / 3),
          ("-5/2+i/7", mp.mpc(mp.mpf(-5) / 2, mp.mpf(1) / 7)), ("1/3+2i", mp.mpc(mp.mpf(1) / 3, 2))]

out = []
for label, l in POINTS:
    coeffs = [mp.diff(mp.rgamma, l + 1, n) / mp.factorial(n) for n in range(ORDER)]
    coeffs = [mp.mpc(c) for c in coeffs]
    out.append({"l": label, "re": mp.nstr(mp.re(l), 30), "im": mp.nstr(mp.im(l), 30),
                "coefficients": [[mp.nstr(c.real, 30), mp.nstr(c.imag, 30)] for c in coeffs]})
print(json.dumps({"order": ORDER, "digits": 50, "points": out}, indent=1))
