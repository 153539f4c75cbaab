#ifndef MZV_IDENTITIES_HPP
#define MZV_IDENTITIES_HPP

#include "mzv/evaluation.hpp"
#include "mzv/interpolation.hpp"

#include <string>
#include <vector>

namespace mzv {

enum class CheckMode { Exact, Numeric };
enum class Verdict { Pass, Fail, Inconclusive };

struct Report {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    CheckMode mode = CheckMode::Exact;
    double tolerance = 0.0;  // numeric mode
    double bound = 0.0;      // tail bound backing the tolerance
    std::string lhs, rhs;
    Verdict verdict = Verdict::Fail;
    double elapsed_ms = 0.0;

    bool passed() const { return verdict == Verdict::Pass; }
    std::string to_json() const;
    std::string summary_line() const;
};

// zeta(x *t y) = zeta(x) zeta(y), exact at every truncation.
Report check_product_homomorphism(const Composition& x, const Composition& y, long n,
                                  const TAssignment& t);

// Operator lemmas: 'a' contraction form (plain words only), 'b'
// nilpotency of S - id, 'c' two-marker composition.
Report check_s_lemma(const TWord& word, char part);

// Yamamoto sum formula at a scalar t, numeric with tail tolerance.
Report check_sum_formula(int k, int nd, const Rational& t_value, long N, double tol = 0.0);

// Refined identity: coefficient extraction at contraction level i.
Report check_refined_identity(int k, int nd, int i, long N, double tol = 0.0);

// Depth-2 multi-interpolated sum formula, numeric.
Report check_depth2_multi_sum(int k, long N, const TAssignment& t, double tol = 0.0);

// Five-way agreement for zeta_n^t({s}_k), k <= K: product form,
// exp-log form, both corollaries and the direct weak-chain oracle.
Report check_five_way(int s, int K, long n, const TAssignment& t);

// Determinant form of the modified Bell polynomial against the
// factorial-scaled complete Bell polynomial, random rationals.
Report check_modified_bell(int k, unsigned seed);

// u-interpolation equals V applied to the S-operator expansion, exact.
Report check_u_interpolation(const Composition& idx, const UWeights& u, long n);

// With u_m = t^m the u-interpolation matches the constant-t value, exact.
Report check_u_interpolation_geometric(const Composition& idx, const Rational& t, long n);

// V is not multiplicative: search for a counterexample over small words.
Report check_v_not_multiplicative(long n, unsigned seed);

// Exact even-odd split of the truncated depth-2 value.
Report check_even_odd_split(int i1, int i2, long n, const Rational& t_even,
                            const Rational& t_odd);

struct SuiteConfig {
    unsigned seed = 1;
};

// Suites: "exact-core", "numeric-sum-formulas", "all".
std::vector<Report> run_suite(const std::string& name, const SuiteConfig& config);

} // namespace mzv

#endif
