#include "mzv/series.hpp"

#include <stdexcept>

namespace mzv {

namespace {

// Dense truncated multiplication at degree cap K.
std::vector<Rational> mul_trunc(const std::vector<Rational>& a,
                                const std::vector<Rational>& b, int K) {
    std::vector<Rational> r(static_cast<std::size_t>(K) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(K); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(K); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

} // namespace

SeriesCoeffs theta_coeffs_product(int s, long n, const TAssignment& t, int K) {
    if (K < 0 || n < 1 || s < 1) throw std::invalid_argument("bad series arguments");
    const MarkerId tau = Marker::tau().id;
    std::vector<Rational> acc(static_cast<std::size_t>(K) + 1, Rational(0));
    acc[0] = Rational(1);
    for (long m = 1; m <= n; ++m) {
        Rational q = Rational(1) / rational_pow(Rational(m), static_cast<unsigned long>(s));
        Rational tm = t.value(tau, m);
        // 1 + sum_{j>=1} q^j t_m^{j-1} z^j
        std::vector<Rational> factor(static_cast<std::size_t>(K) + 1, Rational(0));
        factor[0] = Rational(1);
        Rational term = q;
        for (int j = 1; j <= K; ++j) {
            factor[static_cast<std::size_t>(j)] = term;
            term *= q * tm;
        }
        acc = mul_trunc(acc, factor, K);
    }
    return SeriesCoeffs{std::move(acc), s, n, K};
}

Rational power_sum(int s, long n, const TAssignment& t, int j) {
    const MarkerId tau = Marker::tau().id;
    Rational p(0);
    for (long m = 1; m <= n; ++m) {
        Rational tm = t.value(tau, m);
        Rational diff = rational_pow(tm, static_cast<unsigned long>(j)) -
                        rational_pow(tm - 1, static_cast<unsigned long>(j));
        p += diff / rational_pow(Rational(m), static_cast<unsigned long>(j) *
                                                  static_cast<unsigned long>(s));
    }
    return p;
}

SeriesCoeffs theta_coeffs_explog(int s, long n, const TAssignment& t, int K) {
    if (K < 0 || n < 1 || s < 1) throw std::invalid_argument("bad series arguments");
    std::vector<Rational> p(static_cast<std::size_t>(K) + 1, Rational(0));
    for (int j = 1; j <= K; ++j) p[static_cast<std::size_t>(j)] = power_sum(s, n, t, j);
    // exp of L(z) = sum_j p_j z^j / j via k e_k = sum_j p_j e_{k-j}.
    std::vector<Rational> e(static_cast<std::size_t>(K) + 1, Rational(0));
    e[0] = Rational(1);
    for (int k = 1; k <= K; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j)
            acc += p[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(k - j)];
        e[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return SeriesCoeffs{std::move(e), s, n, K};
}

Rational complete_bell(const std::vector<Rational>& xs) {
    const std::size_t k = xs.size();
    std::vector<Rational> b(k + 1, Rational(0));
    b[0] = Rational(1);
    for (std::size_t m = 1; m <= k; ++m) {
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j)
            acc += binomial(m - 1, j) * b[m - 1 - j] * xs[j];
        b[m] = acc;
    }
    return b[k];
}

Rational modified_bell_det(const std::vector<Rational>& xs) {
    const int k = static_cast<int>(xs.size());
    if (k < 1) throw std::invalid_argument("modified Bell determinant needs k >= 1");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k),
                                         std::vector<Rational>(static_cast<std::size_t>(k),
                                                               Rational(0)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= i; ++j) m[i][j] = xs[static_cast<std::size_t>(i - j)];
        if (i + 1 < k) m[i][i + 1] = Rational(-(i + 1));
    }
    // Exact Gaussian elimination.
    Rational det(1);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < k; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (int j = col; j < k; ++j)
                m[row][j] -= f * m[col][j];
        }
    }
    return det / factorial(static_cast<unsigned long>(k));
}

Rational corollary1_value(int s, int k, long n, const TAssignment& t) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    Rational acc(0);
    for (int l = 0; l <= k; ++l) {
        Rational star = eval_fast_uniform(s, l, n, t, /*star=*/true);
        Rational strict = eval_fast_uniform(s, k - l, n, t, /*star=*/false,
                                            Rational(-1), Rational(1));
        acc += star * strict;
    }
    return acc;
}

Rational corollary2_value(int s, int k, long n, const TAssignment& t) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (k == 0) return Rational(1);
    std::vector<Rational> xs(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j)
        xs[static_cast<std::size_t>(j - 1)] =
            factorial(static_cast<unsigned long>(j - 1)) * power_sum(s, n, t, j);
    return complete_bell(xs) / factorial(static_cast<unsigned long>(k));
}

} // namespace mzv
