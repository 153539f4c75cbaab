#ifndef MZV_WORDS_HPP
#define MZV_WORDS_HPP

#include "mzv/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

// Formal interpolation markers. Ids index a process-wide registry;
// the registry always contains TAU (the default marker, printed "t").
using MarkerId = int;

struct Marker {
    MarkerId id = 0;

    static Marker tau();
    // Registers the name if unseen, otherwise returns the existing marker.
    static Marker named(const std::string& name);
    static const std::string& name_of(MarkerId id);

    std::string name() const { return name_of(id); }
    auto operator<=>(const Marker&) const = default;
};

// One letter z_i together with the marker powers prefixed to it.
struct Block {
    int letter = 1;                                   // z_letter, >= 1
    std::vector<std::pair<MarkerId, int>> exps;       // sorted by id, powers > 0

    Block() = default;
    explicit Block(int l) : letter(l) {}

    int exponent(MarkerId m) const;
    void add_exponent(MarkerId m, int p);             // keeps exps canonical
    bool plain() const { return exps.empty(); }

    auto operator<=>(const Block&) const = default;
};

// A word in the marker-decorated letter algebra; empty = unit word 1.
struct TWord {
    std::vector<Block> blocks;

    bool is_unit() const { return blocks.empty(); }
    int depth() const { return static_cast<int>(blocks.size()); }
    int weight() const;
    bool plain() const;

    auto operator<=>(const TWord&) const = default;
};

// Finite formal linear combination of words with exact rational
// coefficients; zero coefficients are never stored.
class LinComb {
public:
    LinComb() = default;

    static LinComb zero() { return LinComb(); }
    static LinComb unit();
    static LinComb of(const TWord& w, const Rational& c = Rational(1));

    void add_term(const TWord& w, const Rational& c);
    const std::map<TWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const TWord& w) const;

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    bool operator==(const LinComb&) const = default;

private:
    std::map<TWord, Rational> terms_;
};

LinComb lincomb_add(const LinComb& a, const LinComb& b);
LinComb lincomb_scale(const LinComb& a, const Rational& c);

// Sequence of positive integer exponents (i_1,...,i_k).
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) {}
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

    int depth() const { return static_cast<int>(parts.size()); }
    int weight() const;
    bool admissible() const { return parts.empty() || parts.front() >= 2; }

    auto operator<=>(const Composition&) const = default;
};

// Construction. Rejects letter < 1 or negative exponents.
TWord word_from_blocks(const std::vector<std::pair<std::vector<std::pair<MarkerId, int>>, int>>& blocks);
TWord word_of_letters(const std::vector<int>& letters);
TWord word_of(const Composition& idx);

// Raises the marker power on the first block. Rejects the unit word.
TWord prefix_marker(const TWord& w, Marker m, int p);

// Prepends a block (concatenation on the left).
TWord prepend_block(const Block& b, const TWord& w);
LinComb prepend_block(const Block& b, const LinComb& x);

// Text form: blocks joined by spaces, markers before their letter,
// e.g. "z2 t z1", "t^2 z5", "t2^1 z4". Unit word prints "1".
std::string to_string(const Block& b);
std::string to_string(const TWord& w);
std::string to_string(const LinComb& x);
std::string to_string(const Composition& c);

// Parses the text form above. Throws std::invalid_argument on bad input.
TWord parse_word(const std::string& s);
Composition parse_composition(const std::string& s); // "2,1,1"

} // namespace mzv

#endif
