#include "mzv/identities.hpp"
#include "mzv/products.hpp"
#include "mzv/series.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mzv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

Report exact_report(std::string id,
                    std::vector<std::pair<std::string, std::string>> params,
                    const Rational& lhs, const Rational& rhs, Clock::time_point start) {
    Report r;
    r.identity = std::move(id);
    r.params = std::move(params);
    r.mode = CheckMode::Exact;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
    r.elapsed_ms = ms_since(start);
    return r;
}

Report symbolic_report(std::string id,
                       std::vector<std::pair<std::string, std::string>> params,
                       const LinComb& lhs, const LinComb& rhs, Clock::time_point start) {
    Report r;
    r.identity = std::move(id);
    r.params = std::move(params);
    r.mode = CheckMode::Exact;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
    r.elapsed_ms = ms_since(start);
    return r;
}

Report numeric_report(std::string id,
                      std::vector<std::pair<std::string, std::string>> params,
                      double lhs, double rhs, double bound, double tol,
                      Clock::time_point start) {
    Report r;
    r.identity = std::move(id);
    r.params = std::move(params);
    r.mode = CheckMode::Numeric;
    r.bound = bound;
    // Default tolerance: tail bounds plus a rounding floor for the
    // double-precision sweeps themselves.
    r.tolerance = tol > 0 ? tol : 4.0 * bound + 1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs));
    r.lhs = fmt_double(lhs);
    r.rhs = fmt_double(rhs);
    if (r.tolerance < bound)
        r.verdict = Verdict::Inconclusive;
    else
        r.verdict = std::abs(lhs - rhs) <= r.tolerance ? Verdict::Pass : Verdict::Fail;
    r.elapsed_ms = ms_since(start);
    return r;
}

// All compositions of k with the given depth and leading entry >= 2.
std::vector<Composition> admissible_compositions(int k, int depth) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int rest, int slots) -> void {
        if (slots == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        int lo = cur.parts.empty() ? 2 : 1;
        for (int p = lo; p <= rest - (slots - 1); ++p) {
            cur.parts.push_back(p);
            self(self, rest - p, slots - 1);
            cur.parts.pop_back();
        }
    };
    rec(rec, k, depth);
    return out;
}

Rational random_rational_in_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, 12);
    int q = den(rng);
    std::uniform_int_distribution<int> num(-q, q);
    return rat(num(rng), q);
}

} // namespace

std::string Report::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["mode"] = mode == CheckMode::Exact ? "exact" : "numeric";
    if (mode == CheckMode::Numeric) {
        j["tolerance"] = tolerance;
        j["tail_bound"] = bound;
    }
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["pass"] = passed();
    if (verdict == Verdict::Inconclusive) j["verdict"] = "inconclusive";
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string Report::summary_line() const {
    std::string status = verdict == Verdict::Pass          ? "PASS"
                         : verdict == Verdict::Inconclusive ? "INCONCLUSIVE"
                                                            : "FAIL";
    std::string p;
    for (const auto& [k, v] : params) {
        if (!p.empty()) p += " ";
        p += k + "=" + v;
    }
    return status + " " + identity + (p.empty() ? "" : " [" + p + "]");
}

Report check_product_homomorphism(const Composition& x, const Composition& y, long n,
                                  const TAssignment& t) {
    auto start = Clock::now();
    LinComb wx = LinComb::of(word_of(x));
    LinComb wy = LinComb::of(word_of(y));
    Rational lhs = eval_lincomb_truncated(s_operator(interp_product(wx, wy)), n, t);
    Rational rhs = eval_lincomb_truncated(s_operator(wx), n, t) *
                   eval_lincomb_truncated(s_operator(wy), n, t);
    return exact_report("product-homomorphism",
                        {{"x", to_string(x)}, {"y", to_string(y)}, {"n", std::to_string(n)}},
                        lhs, rhs, start);
}

Report check_s_lemma(const TWord& word, char part) {
    auto start = Clock::now();
    std::vector<std::pair<std::string, std::string>> params{
        {"word", to_string(word)}, {"part", std::string(1, part)}};
    switch (part) {
    case 'a': {
        if (!word.plain()) throw std::invalid_argument("lemma (a) needs a plain word");
        LinComb lhs = s_operator(LinComb::of(word));
        LinComb rhs = s_operator_contraction(word);
        return symbolic_report("s-lemma", std::move(params), lhs, rhs, start);
    }
    case 'b': {
        if (word.is_unit()) throw std::invalid_argument("lemma (b) needs a non-empty word");
        LinComb x = LinComb::of(word);
        for (int i = 0; i < word.depth(); ++i) x = s_operator(x) - x;
        return symbolic_report("s-lemma", std::move(params), x, LinComb::zero(), start);
    }
    case 'c': {
        Marker m1 = Marker::named("t1");
        Marker m2 = Marker::named("t2");
        LinComb x = LinComb::of(word);
        LinComb combined = s_operator_combined(x, m1, m2);
        LinComb order12 = s_operator(s_operator(x, m2), m1);
        LinComb order21 = s_operator(s_operator(x, m1), m2);
        Report r = symbolic_report("s-lemma", std::move(params), combined, order12, start);
        if (r.passed() && combined != order21) r.verdict = Verdict::Fail;
        return r;
    }
    default:
        throw std::invalid_argument("unknown lemma part");
    }
}

Report check_sum_formula(int k, int nd, const Rational& t_value, long N, double tol) {
    auto start = Clock::now();
    if (k <= nd || nd < 1) throw std::invalid_argument("sum formula needs k > nd >= 1");
    if (abs(t_value) > 1) throw std::invalid_argument("sum formula needs |t| <= 1");
    TAssignment t = TAssignment::constant(t_value);
    double lhs = 0.0, bound = 0.0;
    for (const auto& idx : admissible_compositions(k, nd)) {
        lhs += eval_multi_interp_direct_f(idx, N, t);
        bound += std::pow(2.0, nd - 1) * tail_bound(nd, idx.parts.front(), N);
    }
    Rational poly(0);
    Rational tv = t_value;
    for (int j = 0; j <= nd - 1; ++j)
        poly += binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j)) *
                rational_pow(tv, static_cast<unsigned long>(j)) *
                rational_pow(Rational(1) - tv, static_cast<unsigned long>(nd - 1 - j));
    double rhs = zeta_truncated_f(Composition{k}, N) * to_double(poly);
    bound += std::abs(to_double(poly)) * tail_bound(1, k, N);
    return numeric_report("sum-formula",
                          {{"k", std::to_string(k)},
                           {"nd", std::to_string(nd)},
                           {"t", to_string(t_value)},
                           {"N", std::to_string(N)}},
                          lhs, rhs, bound, tol, start);
}

Report check_refined_identity(int k, int nd, int i, long N, double tol) {
    auto start = Clock::now();
    if (k <= nd) throw std::invalid_argument("refined identity needs k > nd");
    if (i < 0 || i > nd - 1) throw std::invalid_argument("contraction level out of range");
    double lhs = 0.0, bound = 0.0;
    for (const auto& idx : admissible_compositions(k, nd)) {
        for (const auto& p : compositions(nd)) {
            if (nd - p.depth() != i) continue;
            Composition c = contract_index(idx, p);
            lhs += zeta_truncated_f(c, N);
            bound += tail_bound(c.depth(), c.parts.front(), N);
        }
    }
    Rational coeff = binomial(static_cast<unsigned long>(k - nd + i - 1),
                              static_cast<unsigned long>(k - nd - 1));
    double rhs = zeta_truncated_f(Composition{k}, N) * to_double(coeff);
    bound += to_double(coeff) * tail_bound(1, k, N);
    return numeric_report("refined-identity",
                          {{"k", std::to_string(k)},
                           {"nd", std::to_string(nd)},
                           {"i", std::to_string(i)},
                           {"N", std::to_string(N)}},
                          lhs, rhs, bound, tol, start);
}

Report check_depth2_multi_sum(int k, long N, const TAssignment& t, double tol) {
    auto start = Clock::now();
    if (k < 3) throw std::invalid_argument("depth-2 multi sum needs k >= 3");
    double lhs = 0.0, bound = 0.0;
    for (int k1 = 2; k1 <= k - 1; ++k1) {
        lhs += eval_multi_interp_direct_f(Composition{k1, k - k1}, N, t);
        bound += 2.0 * tail_bound(2, k1, N);
    }
    double rhs = zeta_truncated_f(Composition{k}, N);
    const MarkerId tau = Marker::tau().id;
    double tpart = 0.0;
    for (long l = 1; l <= N; ++l)
        tpart += to_double(t.value(tau, l)) * std::pow(static_cast<double>(l), -k);
    rhs += (k - 2) * tpart;
    bound += (k - 1) * tail_bound(1, k, N);
    return numeric_report("depth2-multi-sum",
                          {{"k", std::to_string(k)}, {"N", std::to_string(N)}},
                          lhs, rhs, bound, tol, start);
}

Report check_five_way(int s, int K, long n, const TAssignment& t) {
    auto start = Clock::now();
    SeriesCoeffs prod = theta_coeffs_product(s, n, t, K);
    SeriesCoeffs explog = theta_coeffs_explog(s, n, t, K);
    bool ok = true;
    std::string lhs, rhs;
    for (int k = 0; k <= K && ok; ++k) {
        Rational direct = eval_multi_interp_direct(
            Composition(std::vector<int>(static_cast<std::size_t>(k), s)), n, t);
        Rational c1 = corollary1_value(s, k, n, t);
        Rational c2 = corollary2_value(s, k, n, t);
        const Rational& p = prod.c[static_cast<std::size_t>(k)];
        const Rational& e = explog.c[static_cast<std::size_t>(k)];
        if (!(p == e && e == c1 && c1 == c2 && c2 == direct)) {
            ok = false;
            lhs = to_string(p) + "|" + to_string(e) + "|" + to_string(c1) + "|" + to_string(c2);
            rhs = to_string(direct);
        }
    }
    Report r;
    r.identity = "five-way-uniform";
    r.params = {{"s", std::to_string(s)}, {"K", std::to_string(K)}, {"n", std::to_string(n)}};
    r.mode = CheckMode::Exact;
    r.lhs = ok ? "agree" : lhs;
    r.rhs = ok ? "agree" : rhs;
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    r.elapsed_ms = ms_since(start);
    return r;
}

Report check_modified_bell(int k, unsigned seed) {
    auto start = Clock::now();
    std::mt19937_64 rng(seed);
    std::vector<Rational> xs(static_cast<std::size_t>(k));
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (auto& x : xs) x = rat(num(rng), den(rng));
    std::vector<Rational> scaled(xs.size());
    for (int j = 0; j < k; ++j)
        scaled[static_cast<std::size_t>(j)] =
            factorial(static_cast<unsigned long>(j)) * xs[static_cast<std::size_t>(j)];
    Rational lhs = modified_bell_det(xs);
    Rational rhs = complete_bell(scaled) / factorial(static_cast<unsigned long>(k));
    return exact_report("modified-bell-determinant",
                        {{"k", std::to_string(k)}, {"seed", std::to_string(seed)}},
                        lhs, rhs, start);
}

namespace {

Rational eval_index_pairs(const std::vector<std::pair<Rational, Composition>>& pairs,
                          long n) {
    TAssignment none = TAssignment::constant(Rational(0));
    Rational acc(0);
    for (const auto& [coeff, idx] : pairs)
        acc += coeff * eval_word_truncated(word_of(idx), n, none);
    return acc;
}

} // namespace

Report check_u_interpolation(const Composition& idx, const UWeights& u, long n) {
    auto start = Clock::now();
    Rational lhs = eval_index_pairs(u_interpolation(idx, u), n);
    Rational rhs = eval_index_pairs(v_map(s_operator(LinComb::of(word_of(idx))), u), n);
    return exact_report("u-interpolation",
                        {{"idx", to_string(idx)}, {"n", std::to_string(n)}},
                        lhs, rhs, start);
}

Report check_u_interpolation_geometric(const Composition& idx, const Rational& t, long n) {
    auto start = Clock::now();
    Rational lhs = eval_index_pairs(u_interpolation(idx, UWeights::geometric(t)), n);
    Rational rhs = eval_multi_interp_direct(idx, n, TAssignment::constant(t));
    return exact_report("u-interpolation-geometric",
                        {{"idx", to_string(idx)}, {"t", to_string(t)}, {"n", std::to_string(n)}},
                        lhs, rhs, start);
}

Report check_v_not_multiplicative(long n, unsigned seed) {
    auto start = Clock::now();
    std::mt19937_64 rng(seed);
    std::vector<Composition> candidates{{2}, {3}, {2, 1}, {2, 2}};
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Rational> table{Rational(1)};
        for (int j = 1; j <= 8; ++j) {
            Rational v = random_rational_in_unit(rng);
            if (v == 0) v = rat(1, j + 1);
            table.push_back(v);
        }
        UWeights u = UWeights::from_table(table);
        for (const auto& x : candidates) {
            for (const auto& y : candidates) {
                LinComb wx = LinComb::of(word_of(x));
                LinComb wy = LinComb::of(word_of(y));
                Rational prod_then_v =
                    eval_index_pairs(v_map(s_operator(interp_product(wx, wy)), u), n);
                Rational v_then_prod =
                    eval_index_pairs(v_map(s_operator(wx), u), n) *
                    eval_index_pairs(v_map(s_operator(wy), u), n);
                if (prod_then_v != v_then_prod) {
                    Report r;
                    r.identity = "v-not-multiplicative";
                    r.params = {{"x", to_string(x)},
                                {"y", to_string(y)},
                                {"n", std::to_string(n)},
                                {"seed", std::to_string(seed)}};
                    r.mode = CheckMode::Exact;
                    r.lhs = to_string(prod_then_v);
                    r.rhs = to_string(v_then_prod);
                    r.verdict = Verdict::Pass; // counterexample found
                    r.elapsed_ms = ms_since(start);
                    return r;
                }
            }
        }
    }
    Report r;
    r.identity = "v-not-multiplicative";
    r.params = {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}};
    r.mode = CheckMode::Exact;
    r.lhs = "no counterexample";
    r.rhs = "counterexample expected";
    r.verdict = Verdict::Fail;
    r.elapsed_ms = ms_since(start);
    return r;
}

Report check_even_odd_split(int i1, int i2, long n, const Rational& t_even,
                            const Rational& t_odd) {
    auto start = Clock::now();
    if (i1 < 2) throw std::invalid_argument("even-odd split needs i1 >= 2");
    TAssignment t = TAssignment::of(SequenceRule::even_odd(t_even, t_odd));
    Rational lhs = eval_multi_interp_direct(Composition{i1, i2}, n, t);
    TAssignment none = TAssignment::constant(Rational(0));
    Rational rhs = eval_word_truncated(word_of_letters({i1, i2}), n, none);
    Rational even_part(0), odd_part(0);
    for (long l = 1; l <= n; ++l) {
        Rational term = Rational(1) / rational_pow(Rational(l),
                                                   static_cast<unsigned long>(i1 + i2));
        if (l % 2 == 0)
            even_part += term;
        else
            odd_part += term;
    }
    rhs += t_even * even_part + t_odd * odd_part;
    return exact_report("even-odd-split",
                        {{"i1", std::to_string(i1)},
                         {"i2", std::to_string(i2)},
                         {"n", std::to_string(n)},
                         {"tE", to_string(t_even)},
                         {"tO", to_string(t_odd)}},
                        lhs, rhs, start);
}

namespace {

Composition random_composition(std::mt19937_64& rng, int max_depth, int max_letter) {
    std::uniform_int_distribution<int> depth_d(1, max_depth);
    std::uniform_int_distribution<int> letter_d(1, max_letter);
    int d = depth_d(rng);
    Composition c;
    for (int i = 0; i < d; ++i) c.parts.push_back(letter_d(rng));
    return c;
}

TAssignment random_assignment(std::mt19937_64& rng) {
    std::vector<Rational> cycle;
    std::uniform_int_distribution<int> len(1, 4);
    int p = len(rng);
    for (int i = 0; i < p; ++i) cycle.push_back(random_rational_in_unit(rng));
    return TAssignment::of(SequenceRule::periodic(std::move(cycle)));
}

void all_plain_words(int max_depth, int max_letter, std::vector<TWord>& out) {
    std::vector<int> letters;
    auto rec = [&](auto&& self) -> void {
        if (!letters.empty()) out.push_back(word_of_letters(letters));
        if (static_cast<int>(letters.size()) == max_depth) return;
        for (int l = 1; l <= max_letter; ++l) {
            letters.push_back(l);
            self(self);
            letters.pop_back();
        }
    };
    rec(rec);
}

std::vector<Report> suite_exact_core(const SuiteConfig& config) {
    std::vector<Report> out;
    std::mt19937_64 rng(config.seed);

    for (int i = 0; i < 25; ++i) {
        Composition x = random_composition(rng, 3, 4);
        Composition y = random_composition(rng, 2, 4);
        std::uniform_int_distribution<long> nd(2, 12);
        out.push_back(check_product_homomorphism(x, y, nd(rng), random_assignment(rng)));
    }

    std::vector<TWord> words;
    all_plain_words(4, 2, words);
    for (const auto& w : words) {
        out.push_back(check_s_lemma(w, 'a'));
        out.push_back(check_s_lemma(w, 'b'));
        if (w.depth() <= 3) out.push_back(check_s_lemma(w, 'c'));
    }

    for (int s = 1; s <= 2; ++s)
        for (int trial = 0; trial < 3; ++trial)
            out.push_back(check_five_way(s, 4, 10, random_assignment(rng)));

    for (int k = 1; k <= 6; ++k) out.push_back(check_modified_bell(k, config.seed + k));

    {
        std::vector<Rational> table{Rational(1)};
        for (int j = 1; j <= 6; ++j) table.push_back(random_rational_in_unit(rng));
        out.push_back(check_u_interpolation(Composition{2, 1, 1}, UWeights::from_table(table), 8));
        out.push_back(check_u_interpolation_geometric(Composition{2, 1, 1}, rat(1, 2), 8));
        out.push_back(check_u_interpolation_geometric(Composition{3, 2}, rat(-1, 3), 10));
    }

    out.push_back(check_even_odd_split(2, 1, 20, rat(1, 2), rat(1, 3)));
    out.push_back(check_even_odd_split(3, 2, 15, rat(-1, 4), Rational(1)));

    out.push_back(check_v_not_multiplicative(6, config.seed));
    return out;
}

std::vector<Report> suite_numeric(const SuiteConfig&) {
    std::vector<Report> out;
    const long N = 10000;
    const std::vector<std::pair<int, int>> knd{{3, 2}, {4, 2}, {4, 3}, {5, 2},
                                               {5, 3}, {6, 3}, {7, 3}};
    for (auto [k, nd] : knd) {
        for (const Rational& t : {Rational(0), rat(1, 2), Rational(1)})
            out.push_back(check_sum_formula(k, nd, t, N));
        for (int i = 0; i <= nd - 1; ++i)
            out.push_back(check_refined_identity(k, nd, i, N));
    }
    for (int k = 3; k <= 7; ++k) {
        out.push_back(check_depth2_multi_sum(k, N, TAssignment::of(SequenceRule::inverse())));
        out.push_back(check_depth2_multi_sum(
            k, N, TAssignment::of(SequenceRule::even_odd(rat(1, 2), rat(1, 3)))));
    }
    return out;
}

} // namespace

std::vector<Report> run_suite(const std::string& name, const SuiteConfig& config) {
    if (name == "exact-core") return suite_exact_core(config);
    if (name == "numeric-sum-formulas") return suite_numeric(config);
    if (name == "all") {
        auto out = suite_exact_core(config);
        auto num = suite_numeric(config);
        out.insert(out.end(), num.begin(), num.end());
        return out;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace mzv
