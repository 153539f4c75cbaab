#ifndef MZV_INTERPOLATION_HPP
#define MZV_INTERPOLATION_HPP

#include "mzv/words.hpp"

#include <functional>
#include <vector>

namespace mzv {

// Subsequence (r_0,...,r_s) of (0,...,n) with r_0 = 0, r_s = n; there
// are 2^{n-1} of them for a word of length n.
struct ContractionPattern {
    std::vector<int> r;
};

std::vector<ContractionPattern> contraction_patterns(int n);

// Weights u_0, u_1, ... with u_0 = 1 fixed.
class UWeights {
public:
    static UWeights from_table(std::vector<Rational> values); // values[j] = u_j, u_0 forced to 1
    static UWeights geometric(const Rational& t);             // u_j = t^j

    Rational operator()(int j) const;

private:
    std::function<Rational(int)> f_;
};

// The marker-insertion operator: S(t^p a u) = t^p a S(u) + t^{p+1} a <> S(u).
LinComb s_operator(const LinComb& x, Marker m = Marker::tau());

// Closed contraction form, defined on plain words only.
LinComb s_operator_contraction(const TWord& x, Marker m = Marker::tau());

// Combined-marker recursion with prefix (m1 + m2); used for the
// operator-composition identity.
LinComb s_operator_combined(const LinComb& x, Marker m1, Marker m2);

// All 2^{k-1} compositions of k in lexicographic order by parts.
std::vector<Composition> compositions(int k);

// Contraction of idx along a composition of its depth.
Composition contract_index(const Composition& idx, const Composition& p);

// Decomposition of the weak-chain value into strict-chain words: one
// word per composition of the depth, with TAU powers p_j - 1.
LinComb partition_decompose(const Composition& idx);

// Weighted ordered-partition expansion; one (coefficient, contracted
// index) pair per composition of the depth.
std::vector<std::pair<Rational, Composition>> u_interpolation(const Composition& idx,
                                                              const UWeights& u);

// Maps each word t^{j_1} z_{i_1} ... t^{j_k} z_{i_k} to the plain index
// with coefficient prod u_{j_l}; rejects non-TAU markers.
std::vector<std::pair<Rational, Composition>> v_map(const LinComb& x, const UWeights& u);

} // namespace mzv

#endif
