#include "mzv/interpolation.hpp"
#include "mzv/products.hpp"

#include <map>
#include <stdexcept>

namespace mzv {

std::vector<ContractionPattern> contraction_patterns(int n) {
    if (n < 1) throw std::invalid_argument("contraction patterns need n >= 1");
    std::vector<ContractionPattern> out;
    // Inner cut points are an arbitrary subset of {1,...,n-1}.
    const unsigned total = 1u << (n - 1);
    out.reserve(total);
    for (unsigned mask = 0; mask < total; ++mask) {
        ContractionPattern p;
        p.r.push_back(0);
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) p.r.push_back(i);
        p.r.push_back(n);
        out.push_back(std::move(p));
    }
    return out;
}

UWeights UWeights::from_table(std::vector<Rational> values) {
    if (values.empty()) values.push_back(Rational(1));
    values[0] = Rational(1);
    UWeights u;
    u.f_ = [values = std::move(values)](int j) -> Rational {
        if (j < 0) throw std::invalid_argument("negative u-weight index");
        if (static_cast<std::size_t>(j) >= values.size())
            throw std::out_of_range("u-weight index beyond table");
        return values[j];
    };
    return u;
}

UWeights UWeights::geometric(const Rational& t) {
    UWeights u;
    u.f_ = [t](int j) -> Rational {
        if (j < 0) throw std::invalid_argument("negative u-weight index");
        return rational_pow(t, static_cast<unsigned long>(j));
    };
    return u;
}

Rational UWeights::operator()(int j) const { return f_(j); }

namespace {

LinComb s_operator_word(const TWord& w, Marker m) {
    if (w.depth() <= 1) return LinComb::of(w);
    Block head = w.blocks.front();
    TWord tail;
    tail.blocks.assign(w.blocks.begin() + 1, w.blocks.end());
    LinComb su = s_operator_word(tail, m);
    LinComb r = prepend_block(head, su);
    Block head1 = head;
    head1.add_exponent(m.id, 1);
    r += diamond_into_word(head1, su);
    return r;
}

LinComb s_combined_word(const TWord& w, Marker m1, Marker m2) {
    if (w.depth() <= 1) return LinComb::of(w);
    Block head = w.blocks.front();
    TWord tail;
    tail.blocks.assign(w.blocks.begin() + 1, w.blocks.end());
    LinComb su = s_combined_word(tail, m1, m2);
    LinComb r = prepend_block(head, su);
    Block h1 = head, h2 = head;
    h1.add_exponent(m1.id, 1);
    h2.add_exponent(m2.id, 1);
    r += diamond_into_word(h1, su);
    r += diamond_into_word(h2, su);
    return r;
}

} // namespace

LinComb s_operator(const LinComb& x, Marker m) {
    LinComb r;
    for (const auto& [w, c] : x.terms())
        r += lincomb_scale(s_operator_word(w, m), c);
    return r;
}

LinComb s_operator_contraction(const TWord& x, Marker m) {
    if (!x.plain())
        throw std::invalid_argument("contraction form requires a plain word");
    if (x.is_unit()) return LinComb::unit();
    const int n = x.depth();
    LinComb out;
    for (const auto& pat : contraction_patterns(n)) {
        TWord w;
        for (std::size_t i = 0; i + 1 < pat.r.size(); ++i) {
            int lo = pat.r[i], hi = pat.r[i + 1];
            Block b = x.blocks[lo];
            for (int j = lo + 1; j < hi; ++j) b = diamond(b, x.blocks[j]);
            b.add_exponent(m.id, hi - lo - 1);
            w.blocks.push_back(std::move(b));
        }
        out.add_term(w, Rational(1));
    }
    return out;
}

LinComb s_operator_combined(const LinComb& x, Marker m1, Marker m2) {
    LinComb r;
    for (const auto& [w, c] : x.terms())
        r += lincomb_scale(s_combined_word(w, m1, m2), c);
    return r;
}

std::vector<Composition> compositions(int k) {
    if (k < 1) throw std::invalid_argument("compositions need k >= 1");
    std::vector<Composition> out;
    Composition cur;
    // Lexicographic by parts: recurse smallest first part first.
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.parts.push_back(p);
            self(self, rest - p);
            cur.parts.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

Composition contract_index(const Composition& idx, const Composition& p) {
    if (p.weight() != idx.depth())
        throw std::invalid_argument("composition does not match index depth");
    Composition out;
    int pos = 0;
    for (int part : p.parts) {
        int sum = 0;
        for (int j = 0; j < part; ++j) sum += idx.parts[pos++];
        out.parts.push_back(sum);
    }
    return out;
}

LinComb partition_decompose(const Composition& idx) {
    if (idx.depth() == 0)
        throw std::invalid_argument("partition_decompose needs a non-empty index");
    LinComb out;
    Marker tau = Marker::tau();
    for (const auto& p : compositions(idx.depth())) {
        TWord w;
        int pos = 0;
        for (int part : p.parts) {
            int sum = 0;
            for (int j = 0; j < part; ++j) sum += idx.parts[pos++];
            Block b(sum);
            b.add_exponent(tau.id, part - 1);
            w.blocks.push_back(std::move(b));
        }
        out.add_term(w, Rational(1));
    }
    return out;
}

std::vector<std::pair<Rational, Composition>> u_interpolation(const Composition& idx,
                                                              const UWeights& u) {
    if (!idx.admissible() || idx.depth() == 0)
        throw std::invalid_argument("u_interpolation needs an admissible index");
    std::vector<std::pair<Rational, Composition>> out;
    for (const auto& p : compositions(idx.depth())) {
        Rational coeff(1);
        for (int part : p.parts) coeff *= u(part - 1);
        out.emplace_back(std::move(coeff), contract_index(idx, p));
    }
    return out;
}

std::vector<std::pair<Rational, Composition>> v_map(const LinComb& x, const UWeights& u) {
    const MarkerId tau = Marker::tau().id;
    std::map<Composition, Rational> acc;
    for (const auto& [w, c] : x.terms()) {
        Rational coeff = c;
        Composition idx;
        for (const auto& b : w.blocks) {
            for (const auto& [id, p] : b.exps)
                if (id != tau)
                    throw std::invalid_argument("v_map word carries a non-default marker");
            coeff *= u(b.exponent(tau));
            idx.parts.push_back(b.letter);
        }
        auto [it, inserted] = acc.try_emplace(idx, coeff);
        if (!inserted) it->second += coeff;
    }
    std::vector<std::pair<Rational, Composition>> out;
    out.reserve(acc.size());
    for (auto& [idx, coeff] : acc)
        if (coeff != 0) out.emplace_back(std::move(coeff), idx);
    return out;
}

} // namespace mzv
