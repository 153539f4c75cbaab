#include "mzv/identities.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace mzv;

TEST_CASE("product homomorphism report") {
    Report r = check_product_homomorphism(Composition{2, 1}, Composition{3}, 12,
                                          TAssignment::constant(rat(1, 2)));
    CHECK(r.passed());
    CHECK(r.mode == CheckMode::Exact);
    CHECK(r.lhs == r.rhs);

    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["identity"] == "product-homomorphism");
    CHECK(j["mode"] == "exact");
    CHECK(j["pass"] == true);
    CHECK(j["params"]["x"] == "2,1");
    CHECK(j.contains("elapsed_ms"));
    CHECK_FALSE(j.contains("tolerance"));

    CHECK(r.summary_line().rfind("PASS product-homomorphism [", 0) == 0);
}

TEST_CASE("operator lemma reports") {
    TWord w = word_of_letters({2, 1, 1});
    for (char part : {'a', 'b', 'c'}) CHECK(check_s_lemma(w, part).passed());
    CHECK_THROWS_AS(check_s_lemma(w, 'x'), std::invalid_argument);
    CHECK_THROWS_AS(check_s_lemma(parse_word("t z2"), 'a'), std::invalid_argument);
}

TEST_CASE("sum formula, numeric") {
    Report r = check_sum_formula(3, 2, rat(1, 2), 2000);
    CHECK(r.passed());
    CHECK(r.mode == CheckMode::Numeric);
    CHECK(r.tolerance >= 4.0 * r.bound); // default: tail bounds plus rounding floor

    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["mode"] == "numeric");
    CHECK(j.contains("tolerance"));
    CHECK(j.contains("tail_bound"));

    // classical and star endpoints
    CHECK(check_sum_formula(4, 2, Rational(0), 2000).passed());
    CHECK(check_sum_formula(4, 2, Rational(1), 2000).passed());

    CHECK_THROWS_AS(check_sum_formula(2, 2, Rational(0), 100), std::invalid_argument);
    CHECK_THROWS_AS(check_sum_formula(3, 2, Rational(2), 100), std::invalid_argument);
}

TEST_CASE("a tolerance below the tail bound is inconclusive") {
    Report r = check_sum_formula(3, 2, rat(1, 2), 100, 1e-18);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK_FALSE(r.passed());
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["verdict"] == "inconclusive");
    CHECK(j["pass"] == false);
    CHECK(r.summary_line().rfind("INCONCLUSIVE ", 0) == 0);
}

TEST_CASE("refined identity and depth-2 sum") {
    CHECK(check_refined_identity(5, 2, 0, 2000).passed());
    CHECK(check_refined_identity(5, 2, 1, 2000).passed());
    CHECK_THROWS_AS(check_refined_identity(5, 2, 2, 100), std::invalid_argument);

    CHECK(check_depth2_multi_sum(4, 2000, TAssignment::of(SequenceRule::inverse())).passed());
    CHECK_THROWS_AS(check_depth2_multi_sum(2, 100, TAssignment::constant(Rational(0))),
                    std::invalid_argument);
}

TEST_CASE("five-way agreement and modified Bell") {
    CHECK(check_five_way(2, 3, 8, TAssignment::constant(rat(1, 3))).passed());
    CHECK(check_five_way(1, 3, 6, TAssignment::of(SequenceRule::inverse())).passed());
    for (int k = 1; k <= 6; ++k) CHECK(check_modified_bell(k, 100 + k).passed());
}

TEST_CASE("u-interpolation checks") {
    UWeights u = UWeights::from_table({Rational(1), rat(1, 2), rat(-1, 3), rat(1, 5)});
    CHECK(check_u_interpolation(Composition{2, 1, 1}, u, 8).passed());
    CHECK(check_u_interpolation_geometric(Composition{2, 2}, rat(1, 4), 9).passed());
}

TEST_CASE("v is not multiplicative") {
    Report r = check_v_not_multiplicative(6, 5);
    CHECK(r.passed());
    CHECK(r.lhs != r.rhs); // records the differing values
}

TEST_CASE("even-odd split") {
    CHECK(check_even_odd_split(2, 1, 30, rat(1, 2), rat(1, 3)).passed());
    CHECK(check_even_odd_split(4, 3, 12, Rational(-1), Rational(1)).passed());
    CHECK_THROWS_AS(check_even_odd_split(1, 2, 10, Rational(0), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("suites are deterministic and pass") {
    SuiteConfig cfg;
    cfg.seed = 42;
    auto a = run_suite("exact-core", cfg);
    auto b = run_suite("exact-core", cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].summary_line() == b[i].summary_line());
        CHECK(a[i].passed());
    }

    for (const auto& r : run_suite("numeric-sum-formulas", cfg))
        CHECK(r.passed());

    CHECK(run_suite("all", cfg).size() == a.size() + run_suite("numeric-sum-formulas", cfg).size());
    CHECK_THROWS_AS(run_suite("nosuch", cfg), std::invalid_argument);
}
