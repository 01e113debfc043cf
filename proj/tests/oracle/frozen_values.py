"""Extended-precision oracle for the frozen expected values in the C++ tests.

Every quantity is evaluated straight from its defining series or integral
with mpmath (30 significant digits). Nothing here shares code with the C++
evaluators. Run: python3 tests/oracle/frozen_values.py
"""
from mpmath import (mp, mpf, rf, beta, betainc, quad, sin, cos, asin, pi,
                    gamma, nsum, inf, log, sqrt, hyp3f2)

mp.dps = 30


def coef(n, k):
    return rf(n, k) / (rf(mpf(n) / 2 + 1, k) * (k + 1))


def vol(n):
    return 2 * pi ** (mpf(n + 1) / 2) / gamma(mpf(n + 1) / 2)


def green_series(n, t):
    # Green function from its series: the geometric part is s 3F2(n,1,1; n/2+1,2; s)
    # (analytic continuation stays accurate as s -> 1); the k^-2 part is
    # summed with nsum on its own.
    m = mpf(n) / 2
    x = 1 - mpf(t) ** 2 / 4
    algebraic = nsum(lambda k: coef(n, int(k)) * beta(m, m + k + 1) / beta(m, m), [0, inf])
    return 2 / (n * vol(n)) * (series_S(n, x) - algebraic)


def green_radial(n, r):
    # Radial quadrature of the harmonic-manifold ODE plus the zero-mean constant.
    h = lambda s: quad(lambda u: sin(u) ** (n - 1), [s, pi]) / (vol(n) * sin(s) ** (n - 1))
    phi0 = quad(h, [r, pi])
    c = -vol(n - 1) / vol(n) * quad(lambda s: h(s) * quad(lambda u: sin(u) ** (n - 1), [0, s]), [0, pi])
    return phi0 + c


def kconst(n, a):
    # sum_k c_k B_s(m+k+1, m) = int_0^s u^{m-1} (1-u)^{m-1} S_n(u) du
    m = mpf(n) / 2
    s = sin(mpf(a) / 2) ** 2
    tot = quad(lambda u: u ** (m - 1) * (1 - u) ** (m - 1) * series_S(n, u), [0, s])
    return 2 / (n * vol(n)) * tot / betainc(m, m, 0, s)


def kconst_nsum(n, a):
    # Term-by-term sum; only trustworthy while sin^2(a/2) stays well below 1.
    m = mpf(n) / 2
    s = sin(mpf(a) / 2) ** 2
    tot = nsum(lambda k: coef(n, int(k)) * betainc(m + k + 1, m, 0, s), [0, inf])
    return 2 / (n * vol(n)) * tot / betainc(m, m, 0, s)


def kconst_radial(n, a):
    # Ball mean of G(-p0, .) - G(-p0, p0) over B(p0, a) as a radial integral.
    a = mpf(a)
    f = lambda r: sin(r) ** (n - 1) * series_S(n, sin(r / 2) ** 2)
    return 2 * vol(n - 1) / (n * vol(n) * ball_volume(n, a)) * quad(f, [0, min(a, 3), a])


def series_S(n, s):
    # c_k = (n)_k (1)_k (1)_k / ((n/2+1)_k (2)_k k!)
    s = mpf(s)
    return s * hyp3f2(n, 1, 1, mpf(n) / 2 + 1, 2, s)


def series_S_nsum(n, s):
    return nsum(lambda k: coef(n, int(k)) * mpf(s) ** (k + 1), [0, inf])


def hyp_partial(a, b, c, z, terms):
    tot, term = mpf(0), mpf(1)
    for k in range(terms):
        tot += term
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
    return tot


def ball_volume(n, a):
    return vol(n - 1) * quad(lambda r: sin(r) ** (n - 1), [0, a])


kappa = mpf(1) / 2 - log(2)


def s2_finite(N, a):
    ct2 = cos(a / 2) ** 2 / sin(a / 2) ** 2
    lc = log(cos(a / 2))
    return (N * (N - 1) * (-1 - 2 * ct2 * lc)
            + N * (log(2) - mpf(1) / 2 + log(sin(a / 2)) + ct2 * (mpf(1) / 2 + ct2 * lc)))


def s2_asym(N):
    return kappa * N ** 2 - N * log(N) / 2 + N * (log(2) - mpf(3) / 4)


def sn_finite(n, N, a):
    a = mpf(a)
    ratio = ball_volume(n, pi - a) / ball_volume(n, a)
    return (-2 * N * (N - 1) * kconst(n, a)
            + N * ratio * (kconst(n, pi - a) + kconst(n, a) - kconst(n, pi)))


def optimal_C(n):
    return (n * vol(n) / vol(n - 1)) ** (mpf(2) / n)


def asym_coef(n):
    return -mpf(n) ** (1 + mpf(2) / n) / ((n * n - 4) * vol(n) ** (1 - mpf(2) / n) * vol(n - 1) ** (mpf(2) / n))


def F_pair(n, s, alpha):
    # sum_k c_k Q_k(s, alpha). Summing over k under the integral sign turns
    # the two incomplete-beta sums into int_0^alpha w(u) S_n(u) du and
    # int_0^alpha w(u) S_n(1-u) du with w(u) = (u(1-u))^{m-1}.
    m = mpf(n) / 2
    s, alpha = mpf(s), mpf(alpha)
    w = lambda u: (u * (1 - u)) ** (m - 1)
    Ba = betainc(m, m, 0, alpha)
    Bc = betainc(m, m, 0, 1 - alpha)
    upper = quad(lambda u: w(u) * series_S(n, u), [0, alpha])
    lower = quad(lambda u: w(u) * series_S(n, 1 - u), [0, min(alpha, mpf(1) / 2), alpha])
    return Ba * series_S(n, 1 - s) + Bc * series_S(n, s) + upper - lower


def show(label, v):
    print(f"{label:40s} {mp.nstr(v, 20)}")


if __name__ == "__main__":
    show("hyp2f1(1,4,3,0.25) [1e4 terms]", hyp_partial(1, 4, 3, mpf('0.25'), 10000))
    show("ball_volume(4,1.0)", ball_volume(4, 1))
    show("series_S(2,0.5)", series_S(2, mpf('0.5')))
    show("series_S(4,0.9)", series_S(4, mpf('0.9')))
    show("series_S(4,0.9) nsum", series_S_nsum(4, mpf('0.9')))
    show("series_S(3,0.999)", series_S(3, mpf('0.999')))
    show("green_sn(3,2) series", green_series(3, 2))
    show("green_sn(3,2) radial", green_radial(3, pi))
    show("green_sn(4,1) series", green_series(4, 1))
    show("green_sn(5,0.01) series", green_series(5, mpf('0.01')))
    show("green_quadrature(3,pi/2)", green_radial(3, pi / 2))
    show("green_sn(3,sqrt2)", green_series(3, sqrt(2)))
    show("kconst(4,0.5)", kconst(4, mpf('0.5')))
    show("kconst(4,0.5) nsum", kconst_nsum(4, mpf('0.5')))
    show("kconst(3,2.5)", kconst(3, mpf('2.5')))
    show("kconst(3,2.5) radial", kconst_radial(3, mpf('2.5')))
    show("kconst(5,pi-0.01)", kconst(5, pi - mpf('0.01')))
    show("kconst(5,pi-0.01) radial", kconst_radial(5, pi - mpf('0.01')))
    a100 = 2 * asin(sqrt(mpf(1) / 100))
    show("s2_finite(100, C=1)", s2_finite(100, a100))
    show("s2_asym(2)", s2_asym(2))
    show("s2_asym(100)", s2_asym(100))
    show("sn_finite(3,2,pi/2)", sn_finite(3, 2, pi / 2))
    a50 = sqrt(optimal_C(4)) * mpf(50) ** (-mpf(1) / 4)
    show("sn_finite(4,50,auto)", sn_finite(4, 50, a50))
    show("optimal_C(3)", optimal_C(3))
    show("optimal_C(4)", optimal_C(4))
    show("asym_coef(3)", asym_coef(3))
    show("asym_coef(4)", asym_coef(4))
    show("tetrahedron log energy", -12 * log(sqrt(mpf(8) / 3)))
    show("F(3,0.3,0.6)", F_pair(3, '0.3', '0.6'))
    show("F(4,0.7,0.2)", F_pair(4, '0.7', '0.2'))
    show("F(4,0.25,0.25)", F_pair(4, '0.25', '0.25'))
    show("F(3,0.9,0.95)", F_pair(3, '0.9', '0.95'))
    show("clog upper", 2 * log(2) + log(mpf(2) / 3) / 2 + 3 * log(sqrt(pi) / gamma(mpf(1) / 3)))
