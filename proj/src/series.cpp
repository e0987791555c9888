#include "dcp/series.hpp"

#include "dcp/errors.hpp"

namespace dcp {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

BiPoly one_plus_qt_pow(int i) {
    // (1+qt)^i expanded by the binomial theorem
    BiPoly r;
    for (int k = 0; k <= i; ++k) r.add_term(k, k, binomial(i, k));
    return r;
}

BiPoly koszul_factor(int b) {
    // prod_{k=1}^{b} (1 + q t^k)
    BiPoly r = BiPoly::one();
    for (int k = 1; k <= b; ++k) r = mapping_cone_shift(r, k);
    return r;
}

} // namespace

BiPoly poincare_J_hook(const Hook& h) {
    BiPoly inner;
    for (int i = 0; i <= h.a; ++i) {
        BiPoly p = one_plus_qt_pow(i);
        const mpz_class c = binomial(h.b + i, h.b);
        for (const auto& [k, v] : p.coeffs()) inner.add_term(k.first, k.second, v * c);
    }
    BiPoly r = BiPoly::one();
    // q t^{b+1} * inner
    for (const auto& [k, v] : inner.coeffs()) r.add_term(k.first + 1, k.second + h.b + 1, v);
    return r;
}

BiPoly poincare_hook(const Hook& h) { return koszul_factor(h.b) * poincare_J_hook(h); }

BiPoly herzog_takayama_poincare(const std::vector<int>& set_sizes, int gen_degree) {
    BiPoly r = BiPoly::one();
    for (int s : set_sizes) {
        BiPoly p = one_plus_qt_pow(s);
        for (const auto& [k, v] : p.coeffs()) r.add_term(k.first + 1, k.second + gen_degree, v);
    }
    return r;
}

BiPoly mapping_cone_shift(const BiPoly& P, int m) {
    BiPoly shift = BiPoly::one();
    shift.add_term(1, m, 1);
    return shift * P;
}

BiPoly poincare_recursive_graded(const Hook& h) {
    // base: P_{(0|b)} = prod_{k=1}^{b+1} (1+q t^k); then
    // P_{(a|b)} = P_{(a-1|b)} + prod_{k<=b}(1+qt^k) q t^{b+1} C(b+a,a) (1+qt)^a
    BiPoly P = koszul_factor(h.b + 1);
    const BiPoly kos = koszul_factor(h.b);
    for (int a = 1; a <= h.a; ++a) {
        BiPoly step = kos * one_plus_qt_pow(a);
        BiPoly shifted;
        const mpz_class c = binomial(h.b + a, a);
        for (const auto& [k, v] : step.coeffs())
            shifted.add_term(k.first + 1, k.second + h.b + 1, v * c);
        P = P + shifted;
    }
    return P;
}

UniSeries poincare_recursive_ungraded(const Hook& h) {
    // P_{(0|b)}(q) = (1+q)^{b+1}; P_{(a|b)} = P_{(a-1|b)} + C(a+b,b) q (1+q)^{a+b}
    UniSeries one_plus_q({mpz_class(1), mpz_class(1)});
    UniSeries P = one_plus_q.pow(h.b + 1);
    for (int a = 1; a <= h.a; ++a) {
        UniSeries step = one_plus_q.pow(a + h.b).scale(binomial(a + h.b, h.b));
        P = P + UniSeries::term(1, 1) * step;
    }
    return P;
}

UniSeries t_bracket(int j) {
    std::vector<mpz_class> v(std::max(j, 0), mpz_class(1));
    return UniSeries(std::move(v));
}

UniSeries t_factorial(int j) {
    UniSeries r = UniSeries::one();
    for (int i = 1; i <= j; ++i) r = r * t_bracket(i);
    return r;
}

UniSeries t_binomial(int n, int k) {
    if (k < 0 || k > n)
        throw IndexOutOfRange("t_binomial requires 0 <= k <= n");
    return t_factorial(n).divide_exact(t_factorial(k) * t_factorial(n - k));
}

bool cauchy_identity_check(int n) {
    BiPoly lhs = koszul_factor(n);
    BiPoly rhs;
    for (int k = 0; k <= n; ++k) {
        UniSeries tb = t_binomial(n, k);
        for (int d = 0; d <= tb.degree(); ++d)
            rhs.add_term(k, k * (k + 1) / 2 + d, tb.coeff(d));
    }
    return lhs == rhs;
}

UniSeries hilbert_hook(const Hook& h) {
    const int n = h.n();
    UniSeries one_minus_q({mpz_class(1), mpz_class(-1)});
    UniSeries sum;
    for (int c = 0; c <= h.b; ++c) {
        UniSeries term = one_minus_q.pow(h.b - c).scale(binomial(n, c));
        sum = sum + UniSeries::term(1, c) * term;
    }
    return t_factorial(h.b) * sum; // [b]_q! in the variable q
}

UniSeries hilbert_via_factorization(const Hook& h, int dmax) {
    const int n = h.n();
    const int reg = h.b * (h.b + 1) / 2;
    if (dmax < reg + 1)
        throw TruncationTooSmall("hilbert_via_factorization: dmax must exceed b(b+1)/2");
    // h_{R/J}(q) = 1 + sum_{s>=1} sum_{c=1}^{b} C(n,c) C(s-1,c-1) q^s, truncated
    std::vector<mpz_class> hj(dmax + 1, mpz_class(0));
    hj[0] = 1;
    for (int s = 1; s <= dmax; ++s)
        for (int c = 1; c <= h.b; ++c) hj[s] += binomial(n, c) * binomial(s - 1, c - 1);
    UniSeries hJ(std::move(hj), dmax);
    UniSeries prod = UniSeries::one().truncated(dmax);
    for (int i = 1; i <= h.b; ++i) {
        std::vector<mpz_class> f(i + 1, mpz_class(0));
        f[0] = 1;
        f[i] = -1;
        prod = prod * UniSeries(std::move(f));
    }
    UniSeries result = prod * hJ;
    for (int d = reg + 1; d <= dmax; ++d)
        if (result.coeff(d) != 0)
            throw std::logic_error("factorized Hilbert series fails to vanish past regularity");
    return UniSeries(result.coeffs()); // exact polynomial now
}

bool euler_identity_check(const Hook& h) {
    UniSeries lhs = poincare_hook(h).eval_q(-1); // P(-1, q) with t renamed to q
    UniSeries one_minus_q({mpz_class(1), mpz_class(-1)});
    UniSeries rhs = hilbert_hook(h) * one_minus_q.pow(h.n());
    return lhs == rhs;
}

} // namespace dcp
