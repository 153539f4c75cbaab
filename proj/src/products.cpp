#include "mzv/products.hpp"

#include <stdexcept>

namespace mzv {

Block diamond(const Block& a, const Block& b) {
    Block r = a;
    r.letter += b.letter;
    for (const auto& [id, p] : b.exps) r.add_exponent(id, p);
    return r;
}

LinComb diamond_into_word(const Block& a, const TWord& w) {
    if (w.is_unit()) return LinComb::zero();
    TWord r = w;
    r.blocks.front() = diamond(a, r.blocks.front());
    return LinComb::of(r);
}

LinComb diamond_into_word(const Block& a, const LinComb& x) {
    LinComb r;
    for (const auto& [w, c] : x.terms())
        r += lincomb_scale(diamond_into_word(a, w), c);
    return r;
}

namespace {

// Quasi-shuffle recursion; diamond_sign is +1 (stuffle), -1 (star), 0 (shuffle).
LinComb qshuffle_words(const TWord& x, const TWord& y, int diamond_sign) {
    if (x.is_unit()) return LinComb::of(y);
    if (y.is_unit()) return LinComb::of(x);
    const Block& a = x.blocks.front();
    const Block& b = y.blocks.front();
    TWord u, v;
    u.blocks.assign(x.blocks.begin() + 1, x.blocks.end());
    v.blocks.assign(y.blocks.begin() + 1, y.blocks.end());

    LinComb r = prepend_block(a, qshuffle_words(u, y, diamond_sign));
    r += prepend_block(b, qshuffle_words(x, v, diamond_sign));
    if (diamond_sign != 0) {
        LinComb d = prepend_block(diamond(a, b), qshuffle_words(u, v, diamond_sign));
        r += lincomb_scale(d, Rational(diamond_sign));
    }
    return r;
}

LinComb qshuffle(const LinComb& x, const LinComb& y, int diamond_sign) {
    LinComb r;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            r += lincomb_scale(qshuffle_words(wx, wy, diamond_sign), cx * cy);
    return r;
}

LinComb interp_words(const TWord& x, const TWord& y, Marker m) {
    if (x.is_unit()) return LinComb::of(y);
    if (y.is_unit()) return LinComb::of(x);
    const Block& a = x.blocks.front();
    const Block& b = y.blocks.front();
    TWord u, v;
    u.blocks.assign(x.blocks.begin() + 1, x.blocks.end());
    v.blocks.assign(y.blocks.begin() + 1, y.blocks.end());

    LinComb r = prepend_block(a, interp_words(u, y, m));
    r += prepend_block(b, interp_words(x, v, m));

    LinComb w = interp_words(u, v, m);
    Block d = diamond(a, b);
    // (1 - 2t) (a<>b) w
    r += prepend_block(d, w);
    Block d1 = d;
    d1.add_exponent(m.id, 1);
    r -= lincomb_scale(prepend_block(d1, w), Rational(2));
    // (t^2 - t) (a<>b) <> w
    Block d2 = d;
    d2.add_exponent(m.id, 2);
    r += diamond_into_word(d2, w);
    r -= diamond_into_word(d1, w);
    return r;
}

} // namespace

LinComb stuffle(const LinComb& x, const LinComb& y) { return qshuffle(x, y, 1); }
LinComb star_product(const LinComb& x, const LinComb& y) { return qshuffle(x, y, -1); }
LinComb shuffle(const LinComb& x, const LinComb& y) { return qshuffle(x, y, 0); }

LinComb interp_product(const LinComb& x, const LinComb& y, Marker m) {
    for (const LinComb* side : {&x, &y})
        for (const auto& [w, c] : side->terms())
            for (const auto& b : w.blocks)
                if (b.exponent(m.id) > 0)
                    throw std::invalid_argument(
                        "interp_product input already carries the marker " + m.name());
    LinComb r;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            r += lincomb_scale(interp_words(wx, wy, m), cx * cy);
    return r;
}

} // namespace mzv
