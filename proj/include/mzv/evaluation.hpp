#ifndef MZV_EVALUATION_HPP
#define MZV_EVALUATION_HPP

#include "mzv/words.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mzv {

// A rule assigning a rational t_l to every index l >= 1.
class SequenceRule {
public:
    static SequenceRule constant(const Rational& c);
    static SequenceRule even_odd(const Rational& t_even, const Rational& t_odd);
    static SequenceRule periodic(std::vector<Rational> cycle);
    static SequenceRule table(std::vector<Rational> values, const Rational& fallback);
    static SequenceRule callable(std::function<Rational(long)> f);
    static SequenceRule inverse(); // t_l = 1/l

    Rational at(long l) const;
    // True if |t_l| <= 1 can be guaranteed; callable/table rules are
    // checked up to the given horizon.
    bool bounded_by_one(long horizon) const;

private:
    std::function<Rational(long)> f_;
    std::optional<bool> known_bounded_;
};

// Rules per marker; evaluation of a word needs a rule for every marker
// that appears with positive exponent.
class TAssignment {
public:
    static TAssignment constant(const Rational& c, Marker m = Marker::tau());
    static TAssignment of(SequenceRule rule, Marker m = Marker::tau());

    TAssignment& set(Marker m, SequenceRule rule);
    bool has(MarkerId m) const;
    const SequenceRule& rule(MarkerId m) const; // throws if absent
    Rational value(MarkerId m, long l) const;
    bool bounded_by_one(long horizon) const;

    // Text grammar: const:<q>, evenodd:<qE>,<qO>, periodic:<q1>,...,
    // list:<q1>,..., table:<file>, inv. Rationals written p/q or integers.
    static TAssignment parse(const std::string& spec, Marker m = Marker::tau());

private:
    std::vector<std::pair<MarkerId, SequenceRule>> rules_;
};

struct EvalResult {
    Rational exact;        // exact mode only
    double value = 0.0;
    double tail_bound = 0.0;
    long n = 0;
    bool exact_mode = true;
};

// Exact truncated evaluation, strict inequalities (word semantics).
Rational eval_word_truncated(const TWord& w, long n, const TAssignment& t);
Rational eval_lincomb_truncated(const LinComb& x, long n, const TAssignment& t);

// Weak-chain oracle with per-value equality weights sigma_j.
Rational eval_multi_interp_direct(const Composition& idx, long n, const TAssignment& t);

// Weak chains with per-position marker weights.
Rational eval_star_truncated(const std::vector<Block>& args, long n, const TAssignment& t);

// Uniform-index evaluator for ({s w}_k) with per-position weight
// w_l = alpha t_l + beta; strict (star=false) or weak (star=true)
// chains. Single O(n k) sweep.
Rational eval_fast_uniform(int s, int k, long n, const TAssignment& t, bool star,
                           const Rational& alpha = Rational(1),
                           const Rational& beta = Rational(0));
double eval_fast_uniform_f(int s, int k, long n, const TAssignment& t, bool star,
                           double alpha = 1.0, double beta = 0.0);

// Float counterparts for large truncations.
double eval_word_truncated_f(const TWord& w, long n, const TAssignment& t);
double eval_multi_interp_direct_f(const Composition& idx, long n, const TAssignment& t);
double zeta_truncated_f(const Composition& idx, long n); // classical strict MZV

// Truncation-error bound for an admissible word of the given depth and
// leading letter, |t_l| <= 1.
double tail_bound(int depth, int leading, long n);

// Chooses n from the tail bound so the error is <= eps.
EvalResult eval_float(const TWord& w, const TAssignment& t, double eps);
EvalResult eval_float(const Composition& idx, const TAssignment& t, double eps);

// Hoffman t-value, depth one: odd-denominator sums.
Rational hoffman_t_truncated(int i, long n);
double hoffman_t(int i, double eps = 1e-10);

} // namespace mzv

#endif
