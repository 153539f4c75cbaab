#include "mzv/evaluation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mzv {

SequenceRule SequenceRule::constant(const Rational& c) {
    SequenceRule r;
    r.f_ = [c](long) { return c; };
    r.known_bounded_ = abs(c) <= 1;
    return r;
}

SequenceRule SequenceRule::even_odd(const Rational& t_even, const Rational& t_odd) {
    SequenceRule r;
    r.f_ = [t_even, t_odd](long l) { return l % 2 == 0 ? t_even : t_odd; };
    r.known_bounded_ = abs(t_even) <= 1 && abs(t_odd) <= 1;
    return r;
}

SequenceRule SequenceRule::periodic(std::vector<Rational> cycle) {
    if (cycle.empty()) throw std::invalid_argument("periodic rule needs a non-empty cycle");
    SequenceRule r;
    bool bounded = true;
    for (const auto& c : cycle) bounded = bounded && abs(c) <= 1;
    r.known_bounded_ = bounded;
    r.f_ = [cycle = std::move(cycle)](long l) {
        return cycle[static_cast<std::size_t>((l - 1) % static_cast<long>(cycle.size()))];
    };
    return r;
}

SequenceRule SequenceRule::table(std::vector<Rational> values, const Rational& fallback) {
    SequenceRule r;
    bool bounded = abs(fallback) <= 1;
    for (const auto& c : values) bounded = bounded && abs(c) <= 1;
    r.known_bounded_ = bounded;
    r.f_ = [values = std::move(values), fallback](long l) {
        if (l >= 1 && static_cast<std::size_t>(l) <= values.size())
            return values[static_cast<std::size_t>(l - 1)];
        return fallback;
    };
    return r;
}

SequenceRule SequenceRule::callable(std::function<Rational(long)> f) {
    SequenceRule r;
    r.f_ = std::move(f);
    return r;
}

SequenceRule SequenceRule::inverse() {
    SequenceRule r;
    r.f_ = [](long l) { return Rational(1, l); };
    r.known_bounded_ = true;
    return r;
}

Rational SequenceRule::at(long l) const {
    if (l < 1) throw std::invalid_argument("sequence index must be >= 1");
    return f_(l);
}

bool SequenceRule::bounded_by_one(long horizon) const {
    if (known_bounded_) return *known_bounded_;
    for (long l = 1; l <= horizon; ++l)
        if (abs(f_(l)) > 1) return false;
    return true;
}

TAssignment TAssignment::constant(const Rational& c, Marker m) {
    return of(SequenceRule::constant(c), m);
}

TAssignment TAssignment::of(SequenceRule rule, Marker m) {
    TAssignment t;
    t.set(m, std::move(rule));
    return t;
}

TAssignment& TAssignment::set(Marker m, SequenceRule rule) {
    for (auto& [id, r] : rules_)
        if (id == m.id) {
            r = std::move(rule);
            return *this;
        }
    rules_.emplace_back(m.id, std::move(rule));
    return *this;
}

bool TAssignment::has(MarkerId m) const {
    for (const auto& [id, r] : rules_)
        if (id == m) return true;
    return false;
}

const SequenceRule& TAssignment::rule(MarkerId m) const {
    for (const auto& [id, r] : rules_)
        if (id == m) return r;
    throw std::invalid_argument("no rule for marker " + Marker::name_of(m));
}

Rational TAssignment::value(MarkerId m, long l) const { return rule(m).at(l); }

bool TAssignment::bounded_by_one(long horizon) const {
    for (const auto& [id, r] : rules_)
        if (!r.bounded_by_one(horizon)) return false;
    return true;
}

namespace {

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

} // namespace

TAssignment TAssignment::parse(const std::string& spec, Marker m) {
    if (spec == "inv") return of(SequenceRule::inverse(), m);
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad t-spec: " + spec);
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "const") return constant(parse_rational(rest), m);
    if (kind == "evenodd") {
        auto vals = parse_rational_list(rest);
        if (vals.size() != 2)
            throw std::invalid_argument("evenodd needs exactly two values: " + spec);
        return of(SequenceRule::even_odd(vals[0], vals[1]), m);
    }
    if (kind == "periodic") return of(SequenceRule::periodic(parse_rational_list(rest)), m);
    if (kind == "list")
        return of(SequenceRule::table(parse_rational_list(rest), Rational(0)), m);
    if (kind == "table") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open t-table file: " + rest);
        std::vector<Rational> values;
        Rational fallback(0);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (line.rfind("default:", 0) == 0) {
                fallback = parse_rational(line.substr(8));
                continue;
            }
            values.push_back(parse_rational(line));
        }
        return of(SequenceRule::table(std::move(values), fallback), m);
    }
    throw std::invalid_argument("bad t-spec: " + spec);
}

namespace {

// Scalar adapters so the chain DPs can run exactly or in doubles.
struct RationalOps {
    using S = Rational;
    static S zero() { return Rational(0); }
    static S one() { return Rational(1); }
    static S inv_pow(long l, int i) {
        return Rational(1) / rational_pow(Rational(l), static_cast<unsigned long>(i));
    }
    static S from(const Rational& q) { return q; }
    static S pow(const S& b, int e) { return rational_pow(b, static_cast<unsigned long>(e)); }
    static void accumulate(S& acc, double&, const S& term) { acc += term; }
};

struct DoubleOps {
    using S = double;
    static S zero() { return 0.0; }
    static S one() { return 1.0; }
    static S inv_pow(long l, int i) { return std::pow(static_cast<double>(l), -i); }
    static S from(const Rational& q) { return to_double(q); }
    static S pow(const S& b, int e) { return std::pow(b, e); }
    // Kahan step; keeps long float sweeps accurate.
    static void accumulate(S& acc, double& comp, const S& term) {
        double y = term - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
};

template <class Ops>
typename Ops::S block_weight(const Block& b, long l, const TAssignment& t) {
    typename Ops::S w = Ops::inv_pow(l, b.letter);
    for (const auto& [id, p] : b.exps)
        w *= Ops::pow(Ops::from(t.value(id, l)), p);
    return w;
}

// Strict chains n >= l_1 > ... > l_k >= 1.
template <class Ops>
typename Ops::S word_truncated(const TWord& w, long n, const TAssignment& t) {
    using S = typename Ops::S;
    if (w.is_unit()) return Ops::one();
    const int k = w.depth();
    std::vector<S> prefix(static_cast<std::size_t>(n) + 1, Ops::zero());
    for (int r = k - 1; r >= 0; --r) {
        std::vector<S> next(static_cast<std::size_t>(n) + 1, Ops::zero());
        double comp = 0.0;
        S run = Ops::zero();
        for (long l = 1; l <= n; ++l) {
            S e = block_weight<Ops>(w.blocks[static_cast<std::size_t>(r)], l, t);
            if (r < k - 1) e *= prefix[static_cast<std::size_t>(l - 1)];
            Ops::accumulate(run, comp, e);
            next[static_cast<std::size_t>(l)] = run;
        }
        prefix = std::move(next);
    }
    return prefix[static_cast<std::size_t>(n)];
}

// Weak chains with equality weights t_l per repeated value.
template <class Ops>
typename Ops::S multi_interp_direct(const Composition& idx, long n, const TAssignment& t) {
    using S = typename Ops::S;
    const int k = idx.depth();
    if (k == 0) return Ops::one();
    const MarkerId tau = Marker::tau().id;
    std::vector<S> e_prev, p_prev;
    for (int r = k - 1; r >= 0; --r) {
        std::vector<S> e(static_cast<std::size_t>(n) + 1, Ops::zero());
        std::vector<S> p(static_cast<std::size_t>(n) + 1, Ops::zero());
        double comp = 0.0;
        S run = Ops::zero();
        for (long l = 1; l <= n; ++l) {
            S v = Ops::inv_pow(l, idx.parts[static_cast<std::size_t>(r)]);
            if (r < k - 1) {
                S inner = p_prev[static_cast<std::size_t>(l - 1)];
                inner += Ops::from(t.value(tau, l)) * e_prev[static_cast<std::size_t>(l)];
                v *= inner;
            }
            e[static_cast<std::size_t>(l)] = v;
            Ops::accumulate(run, comp, v);
            p[static_cast<std::size_t>(l)] = run;
        }
        e_prev = std::move(e);
        p_prev = std::move(p);
    }
    return p_prev[static_cast<std::size_t>(n)];
}

} // namespace

Rational eval_word_truncated(const TWord& w, long n, const TAssignment& t) {
    if (n < 1) throw std::invalid_argument("truncation must be >= 1");
    return word_truncated<RationalOps>(w, n, t);
}

Rational eval_lincomb_truncated(const LinComb& x, long n, const TAssignment& t) {
    Rational r(0);
    for (const auto& [w, c] : x.terms()) r += c * eval_word_truncated(w, n, t);
    return r;
}

Rational eval_multi_interp_direct(const Composition& idx, long n, const TAssignment& t) {
    if (n < 1) throw std::invalid_argument("truncation must be >= 1");
    return multi_interp_direct<RationalOps>(idx, n, t);
}

double eval_word_truncated_f(const TWord& w, long n, const TAssignment& t) {
    if (n < 1) throw std::invalid_argument("truncation must be >= 1");
    return word_truncated<DoubleOps>(w, n, t);
}

double eval_multi_interp_direct_f(const Composition& idx, long n, const TAssignment& t) {
    if (n < 1) throw std::invalid_argument("truncation must be >= 1");
    return multi_interp_direct<DoubleOps>(idx, n, t);
}

double zeta_truncated_f(const Composition& idx, long n) {
    return eval_word_truncated_f(word_of(idx), n, TAssignment::constant(Rational(0)));
}

Rational eval_star_truncated(const std::vector<Block>& args, long n, const TAssignment& t) {
    if (n < 1) throw std::invalid_argument("truncation must be >= 1");
    if (args.empty()) return Rational(1);
    const int k = static_cast<int>(args.size());
    std::vector<Rational> prefix(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int r = k - 1; r >= 0; --r) {
        std::vector<Rational> next(static_cast<std::size_t>(n) + 1, Rational(0));
        Rational run(0);
        for (long l = 1; l <= n; ++l) {
            Rational e = block_weight<RationalOps>(args[static_cast<std::size_t>(r)], l, t);
            if (r < k - 1) e *= prefix[static_cast<std::size_t>(l)]; // weak: include l
            run += e;
            next[static_cast<std::size_t>(l)] = run;
        }
        prefix = std::move(next);
    }
    return prefix[static_cast<std::size_t>(n)];
}

Rational eval_fast_uniform(int s, int k, long n, const TAssignment& t, bool star,
                           const Rational& alpha, const Rational& beta) {
    if (s < 1 || k < 0 || n < 1) throw std::invalid_argument("bad eval_fast_uniform arguments");
    const MarkerId tau = Marker::tau().id;
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c[0] = Rational(1);
    for (long m = 1; m <= n; ++m) {
        Rational q = (alpha * t.value(tau, m) + beta) /
                     rational_pow(Rational(m), static_cast<unsigned long>(s));
        if (star) {
            for (int j = 1; j <= k; ++j)
                c[static_cast<std::size_t>(j)] += q * c[static_cast<std::size_t>(j - 1)];
        } else {
            for (int j = k; j >= 1; --j)
                c[static_cast<std::size_t>(j)] += q * c[static_cast<std::size_t>(j - 1)];
        }
    }
    return c[static_cast<std::size_t>(k)];
}

double eval_fast_uniform_f(int s, int k, long n, const TAssignment& t, bool star,
                           double alpha, double beta) {
    if (s < 1 || k < 0 || n < 1) throw std::invalid_argument("bad eval_fast_uniform arguments");
    const MarkerId tau = Marker::tau().id;
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    std::vector<double> comp(static_cast<std::size_t>(k) + 1, 0.0);
    c[0] = 1.0;
    for (long m = 1; m <= n; ++m) {
        double q = (alpha * to_double(t.value(tau, m)) + beta) *
                   std::pow(static_cast<double>(m), -s);
        if (star) {
            for (int j = 1; j <= k; ++j)
                DoubleOps::accumulate(c[static_cast<std::size_t>(j)],
                                      comp[static_cast<std::size_t>(j)],
                                      q * c[static_cast<std::size_t>(j - 1)]);
        } else {
            for (int j = k; j >= 1; --j)
                DoubleOps::accumulate(c[static_cast<std::size_t>(j)],
                                      comp[static_cast<std::size_t>(j)],
                                      q * c[static_cast<std::size_t>(j - 1)]);
        }
    }
    return c[static_cast<std::size_t>(k)];
}

double tail_bound(int depth, int leading, long n) {
    if (leading < 2) throw std::invalid_argument("tail bound needs leading letter >= 2");
    double ln = 1.0 + std::log(static_cast<double>(n));
    return std::pow(ln, depth - 1) * std::pow(static_cast<double>(n), 1.0 - leading) /
           (leading - 1);
}

namespace {

long choose_truncation(int depth, int leading, double eps, double factor) {
    long n = 64;
    while (factor * tail_bound(depth, leading, n) > eps) {
        if (n > (1L << 27))
            throw std::invalid_argument("requested tolerance needs an impractical truncation");
        n *= 2;
    }
    return n;
}

} // namespace

EvalResult eval_float(const TWord& w, const TAssignment& t, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (w.is_unit()) return {Rational(1), 1.0, 0.0, 1, false};
    if (w.blocks.front().letter < 2)
        throw std::invalid_argument("inadmissible word: leading letter must be >= 2");
    long n = choose_truncation(w.depth(), w.blocks.front().letter, eps, 1.0);
    if (!t.bounded_by_one(n))
        throw std::invalid_argument("float evaluation needs |t_l| <= 1");
    EvalResult r;
    r.exact_mode = false;
    r.n = n;
    r.tail_bound = tail_bound(w.depth(), w.blocks.front().letter, n);
    r.value = eval_word_truncated_f(w, n, t);
    return r;
}

EvalResult eval_float(const Composition& idx, const TAssignment& t, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (idx.depth() == 0) return {Rational(1), 1.0, 0.0, 1, false};
    if (!idx.admissible())
        throw std::invalid_argument("inadmissible index: leading entry must be >= 2");
    // The weak-chain value splits into at most 2^{k-1} strict words.
    double factor = std::pow(2.0, idx.depth() - 1);
    long n = choose_truncation(idx.depth(), idx.parts.front(), eps, factor);
    if (!t.bounded_by_one(n))
        throw std::invalid_argument("float evaluation needs |t_l| <= 1");
    EvalResult r;
    r.exact_mode = false;
    r.n = n;
    r.tail_bound = factor * tail_bound(idx.depth(), idx.parts.front(), n);
    r.value = eval_multi_interp_direct_f(idx, n, t);
    return r;
}

Rational hoffman_t_truncated(int i, long n) {
    if (i < 2) throw std::invalid_argument("hoffman t-value needs i >= 2");
    Rational sum(0);
    for (long l = 1; l <= n; l += 2)
        sum += Rational(1) / rational_pow(Rational(l), static_cast<unsigned long>(i));
    return sum;
}

double hoffman_t(int i, double eps) {
    if (i < 2) throw std::invalid_argument("hoffman t-value needs i >= 2");
    auto z = eval_float(Composition{i}, TAssignment::constant(Rational(0)), eps);
    return (1.0 - std::pow(2.0, -i)) * z.value;
}

} // namespace mzv
