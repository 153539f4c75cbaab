#ifndef MZV_PRODUCTS_HPP
#define MZV_PRODUCTS_HPP

#include "mzv/words.hpp"

namespace mzv {

// Letter merge z_i <> z_j = z_{i+j}; marker exponents accumulate.
Block diamond(const Block& a, const Block& b);

// Merges a into the leading block of w. The unit word is annihilated
// (z_i <> 1 = 0), hence the LinComb return type.
LinComb diamond_into_word(const Block& a, const TWord& w);
LinComb diamond_into_word(const Block& a, const LinComb& x);

// The four word products, all bilinear with unit 1.
LinComb stuffle(const LinComb& x, const LinComb& y);
LinComb star_product(const LinComb& x, const LinComb& y);
LinComb shuffle(const LinComb& x, const LinComb& y);

// The interpolated product on plain words; marker powers of m are
// introduced by the product itself. Rejects inputs already carrying m.
LinComb interp_product(const LinComb& x, const LinComb& y, Marker m = Marker::tau());

} // namespace mzv

#endif
