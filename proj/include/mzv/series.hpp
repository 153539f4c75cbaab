#ifndef MZV_SERIES_HPP
#define MZV_SERIES_HPP

#include "mzv/evaluation.hpp"

#include <vector>

namespace mzv {

// Coefficients c_0..c_K of the truncated generating function in z.
struct SeriesCoeffs {
    std::vector<Rational> c; // c[0] == 1 always
    int s = 0;
    long n = 0;
    int K = 0;
};

// Finite product form: prod_{m<=n} (1 + (z/m^s)/(1 - z t_m/m^s)).
SeriesCoeffs theta_coeffs_product(int s, long n, const TAssignment& t, int K);

// exp-log form with truncated power sums p_j.
SeriesCoeffs theta_coeffs_explog(int s, long n, const TAssignment& t, int K);

// Truncated power sum p_j = sum_{m<=n} (t_m^j - (t_m-1)^j)/m^{js}.
Rational power_sum(int s, long n, const TAssignment& t, int j);

// Complete Bell polynomial B_k by the binomial recurrence.
Rational complete_bell(const std::vector<Rational>& xs);

// Modified Bell polynomial Q_k via the k x k determinant divided by k!.
Rational modified_bell_det(const std::vector<Rational>& xs);

// Corollary forms for the uniform value zeta_n^t({s}_k).
Rational corollary1_value(int s, int k, long n, const TAssignment& t);
Rational corollary2_value(int s, int k, long n, const TAssignment& t);

} // namespace mzv

#endif
