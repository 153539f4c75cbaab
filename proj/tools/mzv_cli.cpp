#include "mzv/evaluation.hpp"
#include "mzv/identities.hpp"
#include "mzv/interpolation.hpp"
#include "mzv/products.hpp"
#include "mzv/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInconclusive = 4;

struct EvalOptions {
    std::string index, word, tspec = "const:0";
    std::optional<long> n;
    std::optional<double> eps;
    std::string mode;
    bool json = false;
};

int run_eval(const EvalOptions& opt) {
    if (opt.index.empty() == opt.word.empty()) {
        std::cerr << "eval: exactly one of --index and --word is required\n";
        return kExitUsage;
    }
    if (opt.n.has_value() == opt.eps.has_value()) {
        std::cerr << "eval: exactly one of --n and --eps is required\n";
        return kExitUsage;
    }
    bool float_mode = opt.eps.has_value();
    if (opt.mode == "exact") float_mode = false;
    if (opt.mode == "float") float_mode = true;
    if (float_mode && !opt.eps) {
        std::cerr << "eval: float mode needs --eps\n";
        return kExitUsage;
    }
    if (!float_mode && !opt.n) {
        std::cerr << "eval: exact mode needs --n\n";
        return kExitUsage;
    }

    mzv::TAssignment t = mzv::TAssignment::parse(opt.tspec);
    std::optional<mzv::Composition> idx;
    std::optional<mzv::TWord> word;
    if (!opt.index.empty())
        idx = mzv::parse_composition(opt.index);
    else
        word = mzv::parse_word(opt.word);

    nlohmann::json j;
    try {
        if (float_mode) {
            mzv::EvalResult r = idx ? mzv::eval_float(*idx, t, *opt.eps)
                                    : mzv::eval_float(*word, t, *opt.eps);
            if (opt.json) {
                j["mode"] = "float";
                j["value"] = r.value;
                j["tail_bound"] = r.tail_bound;
                j["n"] = r.n;
                std::cout << j.dump() << "\n";
            } else {
                std::cout.precision(12);
                std::cout << r.value << " (tail bound " << r.tail_bound << ", n=" << r.n
                          << ")\n";
            }
        } else {
            mzv::Rational v = idx ? mzv::eval_multi_interp_direct(*idx, *opt.n, t)
                                  : mzv::eval_word_truncated(*word, *opt.n, t);
            if (opt.json) {
                j["mode"] = "exact";
                j["value"] = mzv::to_string(v);
                j["n"] = *opt.n;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << mzv::to_string(v) << "\n";
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

struct ExpandOptions {
    std::string op, lhs, rhs;
    bool json = false;
};

int run_expand(const ExpandOptions& opt) {
    mzv::LinComb left = mzv::LinComb::of(mzv::parse_word(opt.lhs));
    bool binary = opt.op != "s";
    if (binary && opt.rhs.empty()) {
        std::cerr << "expand: --op " << opt.op << " needs --rhs\n";
        return kExitUsage;
    }
    mzv::LinComb result;
    if (opt.op == "s") {
        result = mzv::s_operator(left);
    } else {
        mzv::LinComb right = mzv::LinComb::of(mzv::parse_word(opt.rhs));
        if (opt.op == "stuffle")
            result = mzv::stuffle(left, right);
        else if (opt.op == "star")
            result = mzv::star_product(left, right);
        else if (opt.op == "shuffle")
            result = mzv::shuffle(left, right);
        else if (opt.op == "interp")
            result = mzv::interp_product(left, right);
        else {
            std::cerr << "expand: unknown --op " << opt.op << "\n";
            return kExitUsage;
        }
    }
    if (opt.json) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [w, c] : result.terms())
            terms.push_back({{"word", mzv::to_string(w)}, {"coeff", mzv::to_string(c)}});
        std::cout << nlohmann::json{{"terms", terms}}.dump() << "\n";
    } else {
        std::cout << mzv::to_string(result) << "\n";
    }
    return kExitOk;
}

struct SeriesOptions {
    int s = 2;
    long n = 10;
    int K = 4;
    std::string tspec = "const:0";
    std::string method = "product";
    bool check = false;
    bool json = false;
};

int run_series(const SeriesOptions& opt) {
    mzv::TAssignment t = mzv::TAssignment::parse(opt.tspec);
    auto coeffs_by = [&](const std::string& method) {
        std::vector<mzv::Rational> c;
        if (method == "product")
            c = mzv::theta_coeffs_product(opt.s, opt.n, t, opt.K).c;
        else if (method == "explog")
            c = mzv::theta_coeffs_explog(opt.s, opt.n, t, opt.K).c;
        else if (method == "bell") {
            for (int k = 0; k <= opt.K; ++k)
                c.push_back(mzv::corollary2_value(opt.s, k, opt.n, t));
        } else if (method == "conv") {
            for (int k = 0; k <= opt.K; ++k)
                c.push_back(mzv::corollary1_value(opt.s, k, opt.n, t));
        } else {
            throw std::invalid_argument("unknown series method: " + method);
        }
        return c;
    };
    std::vector<mzv::Rational> c;
    try {
        c = coeffs_by(opt.method);
        if (opt.check) {
            for (const char* m : {"product", "explog", "bell", "conv"}) {
                if (coeffs_by(m) != c) {
                    std::cerr << "series: method " << m << " disagrees with " << opt.method
                              << "\n";
                    return kExitFail;
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "series: " << e.what() << "\n";
        return kExitUsage;
    }
    if (opt.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& q : c) arr.push_back(mzv::to_string(q));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& q : c) std::cout << mzv::to_string(q) << "\n";
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string suite = "all";
    unsigned seed = 1;
    bool json = false;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<mzv::Report> reports;
    try {
        reports = mzv::run_suite(opt.suite, mzv::SuiteConfig{opt.seed});
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }
    bool any_fail = false, any_inconclusive = false;
    for (const auto& r : reports) {
        std::cout << (opt.json ? r.to_json() : r.summary_line()) << "\n";
        if (r.verdict == mzv::Verdict::Fail) any_fail = true;
        if (r.verdict == mzv::Verdict::Inconclusive) any_inconclusive = true;
    }
    if (any_fail) return kExitFail;
    if (any_inconclusive) return kExitInconclusive;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-interpolated multiple zeta value toolkit"};
    app.require_subcommand(1);

    EvalOptions eopt;
    auto* eval = app.add_subcommand("eval", "evaluate a truncated or float value");
    eval->add_option("--index", eopt.index, "composition, e.g. 2,1,1");
    eval->add_option("--word", eopt.word, "word, e.g. \"z2 t z1\"");
    eval->add_option("--n", eopt.n, "truncation (exact mode)");
    eval->add_option("--eps", eopt.eps, "target accuracy (float mode)");
    eval->add_option("--t", eopt.tspec, "t-sequence spec (default const:0)");
    eval->add_option("--mode", eopt.mode, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    eval->add_flag("--json", eopt.json, "JSON output");

    ExpandOptions xopt;
    auto* expand = app.add_subcommand("expand", "symbolic expansion");
    expand->add_option("--op", xopt.op, "s|stuffle|star|shuffle|interp")->required();
    expand->add_option("--lhs", xopt.lhs, "left word")->required();
    expand->add_option("--rhs", xopt.rhs, "right word (binary ops)");
    expand->add_flag("--json", xopt.json, "JSON output");

    SeriesOptions sopt;
    auto* series = app.add_subcommand("series", "generating-function coefficients");
    series->add_option("--s", sopt.s, "uniform letter")->required();
    series->add_option("--n", sopt.n, "truncation")->required();
    series->add_option("--K", sopt.K, "degree cap")->required();
    series->add_option("--t", sopt.tspec, "t-sequence spec");
    series->add_option("--method", sopt.method, "product|explog|bell|conv");
    series->add_flag("--check", sopt.check, "assert all methods agree");
    series->add_flag("--json", sopt.json, "JSON output");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", vopt.suite, "exact-core|numeric-sum-formulas|all");
    verify->add_option("--seed", vopt.seed, "suite seed");
    verify->add_flag("--json", vopt.json, "JSON report stream");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return run_eval(eopt);
        if (*expand) return run_expand(xopt);
        if (*series) return run_series(sopt);
        if (*verify) return run_verify(vopt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
