"""Symmetric functions, characters, and the Euler-characteristic series.

Symmetric functions are stored in the power-sum basis as sparse maps
from partitions to rationals.  The generating-function engine works in a
ring of truncated Laurent series in u whose coefficients are polynomials
in w (degree <= w_cap) with symmetric-function coefficients (weight <=
n_cap); all arithmetic is exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

# ---------------------------------------------------------------------------
# partitions and characters


def partitions(n, max_part=None):
    """Weakly decreasing integer partitions of n."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def z_mu(mu):
    """Order of the centralizer of a permutation with cycle type mu."""
    z = 1
    for part, grp in itertools.groupby(mu):
        m = len(list(grp))
        z *= part ** m * factorial(m)
    return z


def hook_dim(lam):
    """Dimension of the irreducible S_n-representation of shape lam,
    by the hook length formula."""
    n = sum(lam)
    conj = conjugate(lam)
    num = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            num //= row - j + conj[j] - i - 1
    return num


def conjugate(lam):
    if not lam:
        return ()
    out = [0] * lam[0]
    for row in lam:
        for j in range(row):
            out[j] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """chi^lam(mu) via the Murnaghan-Nakayama rule."""
    if sum(lam) != sum(mu):
        raise ValueError("shape and cycle type must have equal weight")
    if not lam:
        return 1
    k = mu[0]
    rest = mu[1:]
    total = 0
    # remove a border strip of length k from lam
    lam = list(lam)
    rows = len(lam)
    for start in range(rows):
        # strip occupying rows start..end
        for end in range(start, rows):
            cells = lam[start] - (lam[end + 1] if end + 1 < rows else 0) + \
                (end - start)
            if end + 1 < rows and lam[end + 1] > lam[end]:
                break
            if cells == k:
                new = lam[:start] + \
                    [(lam[i + 1] - 1) if i < end else lam[i]
                     for i in range(start, end)] + \
                    [lam[start] - k + (end - start)] + lam[end + 1:]
                new = new[:start] + sorted(new[start:end + 1],
                                           reverse=True) + new[end + 1:]
                strip = tuple(x for x in new if x > 0)
                if list(strip) == sorted(strip, reverse=True):
                    total += (-1) ** (end - start) * mn_character(strip, rest)
            if cells > k:
                break
    return total


# ---------------------------------------------------------------------------
# symmetric functions in the power-sum basis


class SymFun:
    """Sparse map partition -> Fraction, in the power-sum basis."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(lam)] = c

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def p(cls, d, coeff=1):
        return cls({(d,): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            new = out.get(lam, 0) + c
            if new:
                out[lam] = new
            else:
                out.pop(lam, None)
        f = SymFun()
        f.terms = out
        return f

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, SymFun):
            out = SymFun()
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    lam = tuple(sorted(a + b, reverse=True))
                    new = out.terms.get(lam, 0) + ca * cb
                    if new:
                        out.terms[lam] = new
                    else:
                        out.terms.pop(lam, None)
            return out
        c = Fraction(other)
        out = SymFun()
        if c:
            out.terms = {lam: v * c for lam, v in self.terms.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymFun) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def weight_part(self, n):
        out = SymFun()
        out.terms = {lam: c for lam, c in self.terms.items()
                     if sum(lam) == n}
        return out

    def is_homogeneous(self):
        return len({sum(lam) for lam in self.terms}) <= 1

    def __repr__(self):
        if not self.terms:
            return "SymFun(0)"
        bits = []
        for lam, c in sorted(self.terms.items()):
            name = "p[" + ",".join(map(str, lam)) + "]" if lam else "1"
            bits.append(f"{c}*{name}")
        return " + ".join(bits)


def to_schur(f):
    """Schur-basis coefficients of a homogeneous symmetric function."""
    if not f.is_homogeneous():
        raise ValueError("inhomogeneous input")
    if not f.terms:
        return {}
    n = sum(next(iter(f.terms)))
    out = {}
    for lam in partitions(n):
        c = sum((cmu * mn_character(lam, mu) for mu, cmu in f.terms.items()),
                Fraction(0))
        if c:
            out[lam] = c
    return out


def from_schur(coeffs):
    """Power-sum expansion of a Schur-basis combination."""
    f = SymFun()
    for lam, c in coeffs.items():
        lam = tuple(lam)
        for mu in partitions(sum(lam)):
            f = f + SymFun({mu: Fraction(c) * mn_character(lam, mu)
                            / z_mu(mu)})
    return f


def rep_dim(f):
    """Virtual dimension: n! times the coefficient of p_1^n."""
    if not f.terms:
        return Fraction(0)
    if not f.is_homogeneous():
        raise ValueError("inhomogeneous input")
    n = sum(next(iter(f.terms)))
    return factorial(n) * f.terms.get(tuple([1] * n), Fraction(0))


# ---------------------------------------------------------------------------
# number-theoretic tables


def bernoulli_numbers(nmax):
    """B_0..B_nmax with B_1 = -1/2."""
    out = [Fraction(1)]
    for m in range(1, nmax + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += Fraction(factorial(m + 1),
                            factorial(k) * factorial(m + 1 - k)) * out[k]
        out.append(-acc / (m + 1))
    return out


def moebius(n):
    if n == 1:
        return 1
    m, res = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# truncated Laurent series engine
#
# coefficients are dicts {(w_exp, partition): Fraction}; a series is a
# dict {u_exp: coeff}


class SeriesContext:
    def __init__(self, u_prec, n_cap, w_cap=11):
        self.u_prec = u_prec
        self.n_cap = n_cap
        self.w_cap = w_cap

    def trim_coeff(self, coeff):
        return {k: v for k, v in coeff.items()
                if v and k[0] <= self.w_cap and sum(k[1]) <= self.n_cap}


class USeries:
    """Truncated Laurent series in u over Q[w] x symmetric functions."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=None):
        self.ctx = ctx
        self.coeffs = {}
        if coeffs:
            for ue, c in coeffs.items():
                if ue <= ctx.u_prec:
                    cc = ctx.trim_coeff(c)
                    if cc:
                        self.coeffs[ue] = cc

    @classmethod
    def const(cls, ctx, value=1, w=0, partition=()):
        return cls(ctx, {0: {(w, tuple(partition)): Fraction(value)}})

    @classmethod
    def u_power(cls, ctx, e, value=1):
        return cls(ctx, {e: {(0, ()): Fraction(value)}})

    def order(self):
        return min(self.coeffs) if self.coeffs else None

    def __add__(self, other):
        out = {ue: dict(c) for ue, c in self.coeffs.items()}
        for ue, c in other.coeffs.items():
            tgt = out.setdefault(ue, {})
            for k, v in c.items():
                nv = tgt.get(k, 0) + v
                if nv:
                    tgt[k] = nv
                else:
                    tgt.pop(k, None)
        return USeries(self.ctx, out)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, other):
        ctx = self.ctx
        if isinstance(other, USeries):
            out = {}
            for u1, c1 in self.coeffs.items():
                for u2, c2 in other.coeffs.items():
                    ue = u1 + u2
                    if ue > ctx.u_prec:
                        continue
                    tgt = out.setdefault(ue, {})
                    for (w1, l1), v1 in c1.items():
                        for (w2, l2), v2 in c2.items():
                            w = w1 + w2
                            if w > ctx.w_cap:
                                continue
                            lam = tuple(sorted(l1 + l2, reverse=True))
                            if sum(lam) > ctx.n_cap:
                                continue
                            k = (w, lam)
                            nv = tgt.get(k, 0) + v1 * v2
                            if nv:
                                tgt[k] = nv
                            else:
                                tgt.pop(k, None)
            return USeries(ctx, out)
        c = Fraction(other)
        return USeries(ctx, {ue: {k: v * c for k, v in cc.items()}
                             for ue, cc in self.coeffs.items()}) if c \
            else USeries(ctx)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, USeries) and self.coeffs == other.coeffs

    def shift(self, e):
        return USeries(self.ctx, {ue + e: c for ue, c in self.coeffs.items()})

    def positive_order_part(self):
        return USeries(self.ctx,
                       {ue: c for ue, c in self.coeffs.items() if ue >= 1})

    def coefficient(self, ue):
        return dict(self.coeffs.get(ue, {}))

    def weight_coefficient(self, g, n):
        """SymFun at u^(g+n), weight-n part (w must be gone)."""
        c = self.coeffs.get(g + n, {})
        f = SymFun()
        for (w, lam), v in c.items():
            if w == 0 and sum(lam) == n:
                f = f + SymFun({lam: v})
        return f


class PrecisionError(RuntimeError):
    """A series composition requires positive u-order and has none."""


def series_inverse(s):
    """1/s for s with invertible scalar lowest term."""
    ctx = s.ctx
    o = s.order()
    if o is None:
        raise ZeroDivisionError("inverse of zero series")
    lead = s.coeffs[o]
    if list(lead.keys()) != [(0, ())]:
        raise PrecisionError("leading coefficient is not scalar")
    c0 = lead[(0, ())]
    tail = (s.shift(-o) * Fraction(1, 1)) - USeries.const(ctx, c0)
    tail = tail * Fraction(1, c0)
    if (tail.order() or ctx.u_prec + 1) < 1:
        raise PrecisionError("inverse needs positive-order tail")
    geom = USeries.const(ctx)
    power = USeries.const(ctx)
    for m in range(1, ctx.u_prec + 2):
        power = power * tail
        if not power.coeffs:
            break
        geom = geom + power * ((-1) ** m)
    return geom.shift(-o) * Fraction(1, c0)


def series_log1p(t):
    """log(1 + t) for t of positive u-order."""
    ctx = t.ctx
    if t.coeffs and t.order() < 1:
        raise PrecisionError("log needs positive u-order argument")
    out = USeries(ctx)
    power = USeries.const(ctx)
    for m in range(1, ctx.u_prec + 1):
        power = power * t
        if not power.coeffs:
            break
        out = out + power * Fraction((-1) ** (m + 1), m)
    return out


def series_exp(t):
    """exp(t) for t of positive u-order."""
    ctx = t.ctx
    if t.coeffs and t.order() < 1:
        raise PrecisionError("exp needs positive u-order argument")
    out = USeries.const(ctx)
    power = USeries.const(ctx)
    for m in range(1, ctx.u_prec + 1):
        power = power * t
        if not power.coeffs:
            break
        out = out + power * Fraction(1, factorial(m))
    return out


def series_pow_int(s, k):
    out = USeries.const(s.ctx)
    for _ in range(k):
        out = out * s
    return out


# ---------------------------------------------------------------------------
# the generating function


def _e_ell(ctx, ell):
    """E_ell = (1/ell) sum_{d | ell} mu(ell/d) u^(-d)."""
    coeffs = {}
    for d in divisors(ell):
        m = moebius(ell // d)
        if m:
            coeffs[-d] = {(0, ()): Fraction(m, ell)}
    return USeries(ctx, coeffs)


def _lambda_ell(ctx, ell):
    """lambda_ell = u^ell (1 - u^ell) ell."""
    return (USeries.u_power(ctx, ell, ell) -
            USeries.u_power(ctx, 2 * ell, ell))


def log_u_factor(X, ell, ctx, bernoulli):
    """log U_ell(X, u), expanded u-adically.

    The defining expansion is X(log(lambda_ell E_ell) - 1)
      + (-E_ell + X - 1/2) log(1 - X / E_ell)
      + B(-E_ell + X) - B(-E_ell),
    with B(z) the Bernoulli tail sum_{r >= 2} B_r / (r (r-1)) z^(1-r).
    The -X from the first piece cancels the m = 1 term of
    -E log(1 - X/E) = sum_m X^m E^(1-m)/m exactly; the pieces are
    combined here so that the cancellation survives truncation:

      X log(lambda E) + sum_{m>=2} X^m E^(1-m)/m + (X - 1/2) log(1-X/E)
      + sum_r B_r/(r(r-1)) (-1)^(r-1) E^(1-r) [(1-X/E)^(1-r) - 1].
    """
    one = USeries.const(ctx)
    # lambda_ell E_ell = (1 - u^ell) sum_{d | ell} mu(ell/d) u^(ell - d)
    lamE_coeffs = {}
    for d in divisors(ell):
        m = moebius(ell // d)
        if m:
            for e, v in ((ell - d, m), (2 * ell - d, -m)):
                if e <= ctx.u_prec:
                    lamE_coeffs[e] = lamE_coeffs.get(e, 0) + v
    lamE = USeries(ctx, {e: {(0, ()): Fraction(v)}
                         for e, v in lamE_coeffs.items() if v})
    if lamE.coefficient(0) != {(0, ()): Fraction(1)}:
        raise PrecisionError("lambda_ell * E_ell must start at 1")
    out = X * series_log1p(lamE - one)

    E = _e_ell(ctx, ell)
    Einv = series_inverse(E) if ell <= ctx.u_prec else USeries(ctx)
    ratio = X * Einv          # X / E_ell, positive u-order (or truncated 0)
    if ratio.coeffs and ratio.order() < 1:
        raise PrecisionError("X / E_ell must have positive u-order")
    log1m = series_log1p(ratio * -1)   # log(1 - X/E_ell)

    m = 2
    Xpow = X * X
    Epow = Einv
    while ell * (m - 1) <= ctx.u_prec and Epow.coeffs:
        out = out + Xpow * Epow * Fraction(1, m)
        Xpow = Xpow * X
        Epow = Epow * Einv
        m += 1
    out = out + (X - USeries.const(ctx, Fraction(1, 2))) * log1m

    r = 2
    while ell * (r - 1) <= ctx.u_prec:
        br = bernoulli[r]
        if br:
            Epow = series_pow_int(Einv, r - 1)
            binom = series_exp(log1m * (1 - r)) - one
            out = out + Epow * binom * \
                (br * Fraction((-1) ** (r - 1), r * (r - 1)))
        r += 1
    return out


def _mu_argument(ctx, ell, with_w):
    """(1/ell) sum_{d | ell} mu(ell/d) (-p_d + 1 - w^d), or without the
    1 - w^d part when with_w is False."""
    coeff = {}
    for d in divisors(ell):
        m = moebius(ell // d)
        if not m:
            continue
        c = Fraction(m, ell)
        for key, v in ([((0, (d,)), -c)] +
                       ([((0, ()), c), ((d, ()), -c)] if with_w else [])):
            coeff[key] = coeff.get(key, 0) + v
    coeff = {k: v for k, v in coeff.items() if v}
    return USeries(ctx, {0: coeff})


def genfun_C(u_prec, n_cap, w_cap=11, ell_max=None, stability_check=True):
    """The equivariant Euler-characteristic generating function.

    Returns the truncated series -u T_{<=10}(prod_ell U_ell(arg_w)/
    U_ell(arg_0) - 1); the u^(g+n) coefficient's weight-n part is the
    S_n-equivariant Euler characteristic of the 21-shifted small-omega
    truncation at (g, n).  T_{<=10} sums the w^0..w^10 coefficients.
    """
    ctx = SeriesContext(u_prec, n_cap, w_cap)
    bern = bernoulli_numbers(u_prec + 2)
    if ell_max is None:
        ell_max = 2 * u_prec + 2
    prod = USeries.const(ctx)
    for ell in range(1, ell_max + 1):
        Xw = _mu_argument(ctx, ell, True)
        X0 = _mu_argument(ctx, ell, False)
        diff = log_u_factor(Xw, ell, ctx, bern) - \
            log_u_factor(X0, ell, ctx, bern)
        factor = series_exp(diff)
        prod = prod * factor
    if stability_check:
        ell = ell_max + 1
        Xw = _mu_argument(ctx, ell, True)
        X0 = _mu_argument(ctx, ell, False)
        diff = log_u_factor(Xw, ell, ctx, bern) - \
            log_u_factor(X0, ell, ctx, bern)
        extra = prod * series_exp(diff)
        if _truncate_w(extra, ctx) != _truncate_w(prod, ctx):
            raise PrecisionError(f"product unstable at ell={ell}")
    inner = prod - USeries.const(ctx)
    summed = _truncate_w(inner, ctx)
    result = summed.shift(1) * -1
    for ue, c in result.coeffs.items():
        if ue < 0:
            raise PrecisionError("negative u-powers failed to cancel")
    return result


def _truncate_w(s, ctx):
    """Sum the w^0..w^10 coefficients and drop w."""
    out = {}
    for ue, c in s.coeffs.items():
        tgt = {}
        for (w, lam), v in c.items():
            if w <= 10:
                nv = tgt.get((0, lam), 0) + v
                if nv:
                    tgt[(0, lam)] = nv
                else:
                    tgt.pop((0, lam), None)
        if tgt:
            out[ue] = tgt
    return USeries(ctx, out)


def genfun_coefficient(series, g, n):
    """chi_{S_n} of the small-omega truncation at (g, n), as a SymFun."""
    return series.weight_coefficient(g, n)


def n0_series(u_prec, ell_max=None):
    """The weight-0 (n = 0) integer coefficients of genfun_C."""
    s = genfun_C(u_prec, 0, 11, ell_max)
    out = {}
    for ue in range(0, u_prec + 1):
        c = s.coefficient(ue).get((0, ()), Fraction(0))
        if c:
            out[ue] = c
    return out


# ---------------------------------------------------------------------------
# growth coverage


def growth_coverage(k_max):
    """Degrees k <= k_max with exponential growth established.

    U_r = {0,3,...,3r} union {7,10,...,4+3r}; the covered set is
    (19+U_10) u (18+U_10) u (16+U_9) u (12+U_6) u (8+U_3)
    u (3+U_2) u (2+U_2) u {0,3}.
    """
    def u_set(r):
        return set(range(0, 3 * r + 1, 3)) | set(range(7, 5 + 3 * r, 3))

    covered = {0, 3}
    for shift, r in ((19, 10), (18, 10), (16, 9), (12, 6), (8, 3),
                     (3, 2), (2, 2)):
        covered |= {shift + k for k in u_set(r)}
    return {k for k in covered if 0 <= k <= k_max}
