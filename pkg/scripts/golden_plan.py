"""Recompute the N=10 interaction times and coefficients in 50-digit arithmetic.

Independent of the package: the closed forms are re-typed here with mpmath.
The printed values are frozen into tests/test_protocol.py.
"""

import mpmath as mp

mp.mp.dps = 50


def main(N=10):
    c = [mp.mpf(1)]
    times = []
    for k in range(1, N + 1):
        if k == 1:
            t = 3 * mp.pi / 2
        elif k == 2:
            t = 7 * mp.pi / 4
        elif k == 3:
            t = (mp.atan(c[1] / abs(c[2])) + 5 * mp.pi) / mp.sqrt(2)
        else:
            t = mp.atan(c[k - 2] / c[k - 1]) / mp.sqrt(k - 1)
        sign = 1 if k <= 3 else -1
        old = c + [mp.mpf(0)]
        new = []
        for n in range(k + 1):
            lower = old[n - 1] if n >= 1 else mp.mpf(0)
            x = sign * old[n] * mp.cos(mp.sqrt(n) * t) - lower * mp.sin(mp.sqrt(n) * t)
            new.append(sign * x)
        c = new
        times.append(t)
    print("GT_N10 = (")
    for t in times:
        print(f"    {mp.nstr(t, 20)},")
    print(")")
    print("C_N10 = (")
    for x in c:
        print(f"    {mp.nstr(x, 20)},")
    print(")")


if __name__ == "__main__":
    main()
