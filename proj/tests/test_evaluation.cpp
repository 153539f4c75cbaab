#include "mzv/evaluation.hpp"
#include "mzv/interpolation.hpp"
#include "mzv/products.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

using namespace mzv;

namespace {

// Test-only oracles: plain chain enumeration, no shared code with the
// dynamic-programming evaluators.

Rational brute_word(const TWord& w, long n, const TAssignment& t) {
    if (w.is_unit()) return Rational(1);
    const int k = w.depth();
    Rational total(0);
    std::vector<long> chain(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int r, long upper) -> void {
        if (r == k) {
            Rational term(1);
            for (int i = 0; i < k; ++i) {
                const Block& b = w.blocks[static_cast<std::size_t>(i)];
                long l = chain[static_cast<std::size_t>(i)];
                term /= rational_pow(Rational(l), static_cast<unsigned long>(b.letter));
                for (const auto& [id, p] : b.exps)
                    term *= rational_pow(t.value(id, l), static_cast<unsigned long>(p));
            }
            total += term;
            return;
        }
        for (long l = 1; l < upper; ++l) {
            chain[static_cast<std::size_t>(r)] = l;
            self(self, r + 1, l);
        }
    };
    rec(rec, 0, n + 1);
    return total;
}

Rational brute_multi(const Composition& idx, long n, const TAssignment& t) {
    const int k = idx.depth();
    if (k == 0) return Rational(1);
    const MarkerId tau = Marker::tau().id;
    Rational total(0);
    std::vector<long> chain(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int r, long upper) -> void {
        if (r == k) {
            Rational term(1);
            for (int i = 0; i < k; ++i)
                term /= rational_pow(Rational(chain[static_cast<std::size_t>(i)]),
                                     static_cast<unsigned long>(idx.parts[static_cast<std::size_t>(i)]));
            for (int i = 0; i + 1 < k; ++i)
                if (chain[static_cast<std::size_t>(i)] == chain[static_cast<std::size_t>(i + 1)])
                    term *= t.value(tau, chain[static_cast<std::size_t>(i)]);
            total += term;
            return;
        }
        for (long l = 1; l <= upper; ++l) {
            chain[static_cast<std::size_t>(r)] = l;
            self(self, r + 1, l);
        }
    };
    rec(rec, 0, n);
    return total;
}

Rational brute_star(const std::vector<Block>& args, long n, const TAssignment& t) {
    const int k = static_cast<int>(args.size());
    if (k == 0) return Rational(1);
    Rational total(0);
    std::vector<long> chain(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int r, long upper) -> void {
        if (r == k) {
            Rational term(1);
            for (int i = 0; i < k; ++i) {
                const Block& b = args[static_cast<std::size_t>(i)];
                long l = chain[static_cast<std::size_t>(i)];
                term /= rational_pow(Rational(l), static_cast<unsigned long>(b.letter));
                for (const auto& [id, p] : b.exps)
                    term *= rational_pow(t.value(id, l), static_cast<unsigned long>(p));
            }
            total += term;
            return;
        }
        for (long l = 1; l <= upper; ++l) {
            chain[static_cast<std::size_t>(r)] = l;
            self(self, r + 1, l);
        }
    };
    rec(rec, 0, n);
    return total;
}

TAssignment random_assignment(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> cycle;
    int p = den(rng) % 3 + 1;
    for (int i = 0; i < p; ++i) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(-q, q);
        cycle.push_back(rat(num(rng), q));
    }
    return TAssignment::of(SequenceRule::periodic(std::move(cycle)));
}

Composition random_index(std::mt19937_64& rng, int max_depth, int max_letter) {
    std::uniform_int_distribution<int> depth(1, max_depth);
    std::uniform_int_distribution<int> letter(1, max_letter);
    Composition c;
    int d = depth(rng);
    for (int i = 0; i < d; ++i) c.parts.push_back(letter(rng));
    return c;
}

} // namespace

TEST_CASE("sequence rules") {
    auto inv = SequenceRule::inverse();
    CHECK(inv.at(4) == rat(1, 4));
    auto eo = SequenceRule::even_odd(rat(1, 2), rat(1, 3));
    CHECK(eo.at(2) == rat(1, 2));
    CHECK(eo.at(5) == rat(1, 3));
    auto per = SequenceRule::periodic({Rational(1), Rational(0)});
    CHECK(per.at(1) == 1);
    CHECK(per.at(4) == 0);
    auto tab = SequenceRule::table({rat(1, 2)}, rat(1, 7));
    CHECK(tab.at(1) == rat(1, 2));
    CHECK(tab.at(9) == rat(1, 7));
    CHECK_THROWS_AS(inv.at(0), std::invalid_argument);

    CHECK(SequenceRule::constant(rat(3, 2)).bounded_by_one(10) == false);
    CHECK(SequenceRule::inverse().bounded_by_one(10));
}

TEST_CASE("t-spec parsing") {
    CHECK(TAssignment::parse("const:1/2").value(Marker::tau().id, 5) == rat(1, 2));
    CHECK(TAssignment::parse("evenodd:1/2,1/3").value(Marker::tau().id, 3) == rat(1, 3));
    CHECK(TAssignment::parse("periodic:1,0,-1").value(Marker::tau().id, 6) == Rational(-1));
    CHECK(TAssignment::parse("inv").value(Marker::tau().id, 7) == rat(1, 7));
    CHECK(TAssignment::parse("list:1/2,1/3").value(Marker::tau().id, 2) == rat(1, 3));
    CHECK(TAssignment::parse("list:1/2").value(Marker::tau().id, 3) == 0);
    CHECK_THROWS_AS(TAssignment::parse("nope:1"), std::invalid_argument);
    CHECK_THROWS_AS(TAssignment::parse("evenodd:1"), std::invalid_argument);

    std::string path = "ttable_test.txt";
    {
        std::ofstream f(path);
        f << "1/2\n-1/3\ndefault:1/5\n";
    }
    auto t = TAssignment::parse("table:" + path);
    CHECK(t.value(Marker::tau().id, 1) == rat(1, 2));
    CHECK(t.value(Marker::tau().id, 2) == rat(-1, 3));
    CHECK(t.value(Marker::tau().id, 99) == rat(1, 5));
    std::remove(path.c_str());
}

TEST_CASE("eval_word_truncated examples") {
    TAssignment inv = TAssignment::of(SequenceRule::inverse());
    CHECK(eval_word_truncated(parse_word("z2 t z1"), 3, inv) == rat(7, 18));
    CHECK(eval_word_truncated(TWord{}, 5, inv) == 1);
    TAssignment any = TAssignment::constant(rat(1, 2));
    CHECK(eval_word_truncated(parse_word("z2 z1"), 3, any) == rat(5, 12));
    // depth beyond truncation
    CHECK(eval_word_truncated(word_of_letters({1, 1, 1}), 2, any) == 0);
}

TEST_CASE("eval_word_truncated matches chain enumeration") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        TAssignment t = random_assignment(rng);
        Composition idx = random_index(rng, 3, 3);
        TWord w = word_of(idx);
        if (trial % 2 == 0) w = prefix_marker(w, Marker::tau(), 1);
        std::uniform_int_distribution<long> nd(1, 8);
        long n = nd(rng);
        CHECK(eval_word_truncated(w, n, t) == brute_word(w, n, t));
    }
}

TEST_CASE("eval_lincomb_truncated") {
    TAssignment t = TAssignment::of(SequenceRule::table({rat(1, 2), rat(1, 3)}, Rational(0)));
    LinComb s = s_operator(LinComb::of(parse_word("z2 z1")));
    CHECK(eval_lincomb_truncated(s, 2, t) == rat(19, 24));
    CHECK(eval_lincomb_truncated(LinComb::zero(), 4, t) == 0);
}

TEST_CASE("eval_multi_interp_direct examples and oracle") {
    TAssignment t = TAssignment::of(SequenceRule::table({rat(1, 2), rat(1, 3)}, Rational(0)));
    CHECK(eval_multi_interp_direct(Composition{2, 1}, 2, t) == rat(19, 24));

    TAssignment any = TAssignment::constant(rat(-1, 3));
    CHECK(eval_multi_interp_direct(Composition{4}, 6, any) ==
          eval_word_truncated(word_of_letters({4}), 6, any));

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        TAssignment rt = random_assignment(rng);
        Composition idx = random_index(rng, 4, 3);
        std::uniform_int_distribution<long> nd(1, 8);
        long n = nd(rng);
        CHECK(eval_multi_interp_direct(idx, n, rt) == brute_multi(idx, n, rt));
    }
}

TEST_CASE("truncated value equals zeta of the s_operator expansion") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        TAssignment t = random_assignment(rng);
        Composition idx = random_index(rng, 4, 4);
        std::uniform_int_distribution<long> nd(1, 25);
        long n = nd(rng);
        CHECK(eval_lincomb_truncated(s_operator(LinComb::of(word_of(idx))), n, t) ==
              eval_multi_interp_direct(idx, n, t));
    }
}

TEST_CASE("constant t reduces to the scalar interpolation") {
    Rational tval = rat(2, 5);
    TAssignment t = TAssignment::constant(tval);
    Composition idx{2, 1, 1};
    long n = 9;
    Rational expect(0);
    TAssignment none = TAssignment::constant(Rational(0));
    for (const auto& p : compositions(idx.depth())) {
        Rational coeff = rational_pow(tval, static_cast<unsigned long>(idx.depth() - p.depth()));
        expect += coeff * eval_word_truncated(word_of(contract_index(idx, p)), n, none);
    }
    CHECK(eval_multi_interp_direct(idx, n, t) == expect);
}

TEST_CASE("eval_star_truncated") {
    TAssignment one = TAssignment::constant(Rational(1));
    Block b2t(2);
    b2t.add_exponent(Marker::tau().id, 1);
    CHECK(eval_star_truncated({b2t}, 2, one) == rat(5, 4));
    CHECK(eval_star_truncated({b2t, b2t}, 2, one) == rat(21, 16));
    CHECK(eval_star_truncated({}, 10, one) == 1);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        TAssignment t = random_assignment(rng);
        std::vector<Block> args;
        std::uniform_int_distribution<int> letter(1, 3), depth(1, 3), expd(0, 2);
        int k = depth(rng);
        for (int i = 0; i < k; ++i) {
            Block b(letter(rng));
            b.add_exponent(Marker::tau().id, expd(rng));
            args.push_back(b);
        }
        CHECK(eval_star_truncated(args, 7, t) == brute_star(args, 7, t));
    }
}

TEST_CASE("eval_fast_uniform agrees with enumeration") {
    CHECK(eval_fast_uniform(2, 0, 5, TAssignment::constant(Rational(1)), true) == 1);
    CHECK(eval_fast_uniform(2, 2, 2, TAssignment::constant(Rational(1)), true) == rat(21, 16));

    std::mt19937_64 rng(47);
    for (int s = 1; s <= 3; ++s)
        for (int k = 0; k <= 4; ++k) {
            TAssignment t = random_assignment(rng);
            long n = 12;
            Block b(s);
            b.add_exponent(Marker::tau().id, 1);
            // weak mode matches star evaluation of ({s t}_k)
            CHECK(eval_fast_uniform(s, k, n, t, true) ==
                  brute_star(std::vector<Block>(static_cast<std::size_t>(k), b), n, t));
        }
}

TEST_CASE("eval_fast_uniform strict mode against brute-force strict chains") {
    std::mt19937_64 rng(53);
    for (int s = 1; s <= 3; ++s)
        for (int k = 0; k <= 4; ++k) {
            TAssignment t = random_assignment(rng);
            long n = 12;
            // brute force strict chains with weight (1 - t_l) per position
            Rational expect(0);
            std::vector<long> chain(static_cast<std::size_t>(k));
            auto rec = [&](auto&& self, int r, long upper) -> void {
                if (r == k) {
                    Rational term(1);
                    for (int i = 0; i < k; ++i) {
                        long l = chain[static_cast<std::size_t>(i)];
                        term *= (Rational(1) - t.value(Marker::tau().id, l)) /
                                rational_pow(Rational(l), static_cast<unsigned long>(s));
                    }
                    expect += term;
                    return;
                }
                for (long l = 1; l < upper; ++l) {
                    chain[static_cast<std::size_t>(r)] = l;
                    self(self, r + 1, l);
                }
            };
            rec(rec, 0, n + 1);
            CHECK(eval_fast_uniform(s, k, n, t, false, Rational(-1), Rational(1)) == expect);
        }
}

TEST_CASE("eval_fast_uniform float mode on a large truncation") {
    TAssignment zero = TAssignment::constant(Rational(0));
    double z2 = eval_fast_uniform_f(2, 1, 1000000, zero, false, 0.0, 1.0);
    CHECK(std::abs(z2 - M_PI * M_PI / 6.0) < 1e-6);
}

TEST_CASE("monotonicity in the truncation for nonnegative t") {
    TAssignment t = TAssignment::of(SequenceRule::inverse());
    Composition idx{2, 1};
    Rational prev(0);
    for (long n = 1; n <= 10; ++n) {
        Rational v = eval_multi_interp_direct(idx, n, t);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("eval_float reference values") {
    TAssignment zero = TAssignment::constant(Rational(0));
    auto z2 = eval_float(Composition{2}, zero, 1e-6);
    CHECK(std::abs(z2.value - 1.6449340668) <= 1e-6 + z2.tail_bound);
    CHECK(z2.tail_bound <= 1e-6);

    auto z21 = eval_float(parse_word("z2 z1"), zero, 1e-5);
    CHECK(std::abs(z21.value - 1.2020569032) <= 2e-5);

    CHECK_THROWS_AS(eval_float(parse_word("z1 z1"), zero, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(eval_float(Composition{2}, TAssignment::constant(Rational(2)), 1e-3),
                    std::invalid_argument);
}

TEST_CASE("hoffman t-values") {
    CHECK(hoffman_t_truncated(2, 5) == rat(259, 225));
    CHECK(std::abs(hoffman_t(2, 1e-6) - 0.75 * M_PI * M_PI / 6.0) < 1e-5);
    // both modes agree for i = 4
    double truncated = to_double(hoffman_t_truncated(4, 4000));
    CHECK(std::abs(hoffman_t(4, 1e-10) - truncated) < 1e-8);
    CHECK_THROWS_AS(hoffman_t_truncated(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(hoffman_t(1), std::invalid_argument);
}

TEST_CASE("truncated products multiply under evaluation") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        TAssignment t = random_assignment(rng);
        Composition a = random_index(rng, 2, 3);
        Composition b = random_index(rng, 2, 3);
        std::uniform_int_distribution<long> nd(1, 10);
        long n = nd(rng);
        LinComb ca = s_operator(LinComb::of(word_of(a)));
        LinComb cb = s_operator(LinComb::of(word_of(b)));
        // stuffle on the S-expanded (marker-carrying) words
        CHECK(eval_lincomb_truncated(stuffle(ca, cb), n, t) ==
              eval_lincomb_truncated(ca, n, t) * eval_lincomb_truncated(cb, n, t));
        // interpolated product before expansion
        LinComb prod = interp_product(LinComb::of(word_of(a)), LinComb::of(word_of(b)));
        CHECK(eval_lincomb_truncated(s_operator(prod), n, t) ==
              eval_multi_interp_direct(a, n, t) * eval_multi_interp_direct(b, n, t));
    }
}
