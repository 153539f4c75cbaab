#include "mzv/words.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mzv {

namespace {

std::vector<std::string>& marker_registry() {
    static std::vector<std::string> names{"t"};
    return names;
}
std::mutex registry_mutex;

} // namespace

Marker Marker::tau() { return Marker{0}; }

Marker Marker::named(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty marker name");
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& names = marker_registry();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Marker{static_cast<MarkerId>(i)};
    names.push_back(name);
    return Marker{static_cast<MarkerId>(names.size() - 1)};
}

const std::string& Marker::name_of(MarkerId id) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& names = marker_registry();
    if (id < 0 || static_cast<std::size_t>(id) >= names.size())
        throw std::invalid_argument("unknown marker id");
    return names[id];
}

int Block::exponent(MarkerId m) const {
    for (const auto& [id, p] : exps)
        if (id == m) return p;
    return 0;
}

void Block::add_exponent(MarkerId m, int p) {
    if (p < 0) throw std::invalid_argument("negative marker exponent");
    if (p == 0) return;
    auto it = std::lower_bound(exps.begin(), exps.end(), m,
                               [](const auto& e, MarkerId id) { return e.first < id; });
    if (it != exps.end() && it->first == m)
        it->second += p;
    else
        exps.insert(it, {m, p});
}

int TWord::weight() const {
    int w = 0;
    for (const auto& b : blocks) w += b.letter;
    return w;
}

bool TWord::plain() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const Block& b) { return b.plain(); });
}

LinComb LinComb::unit() { return of(TWord{}); }

LinComb LinComb::of(const TWord& w, const Rational& c) {
    LinComb x;
    x.add_term(w, c);
    return x;
}

void LinComb::add_term(const TWord& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LinComb::coefficient(const TWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

LinComb lincomb_add(const LinComb& a, const LinComb& b) { return a + b; }

LinComb lincomb_scale(const LinComb& a, const Rational& c) {
    LinComb r;
    if (c == 0) return r;
    for (const auto& [w, q] : a.terms()) r.add_term(w, q * c);
    return r;
}

int Composition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

TWord word_from_blocks(
    const std::vector<std::pair<std::vector<std::pair<MarkerId, int>>, int>>& blocks) {
    TWord w;
    w.blocks.reserve(blocks.size());
    for (const auto& [exps, letter] : blocks) {
        if (letter < 1) throw std::invalid_argument("letter must be >= 1");
        Block b(letter);
        for (const auto& [m, p] : exps) b.add_exponent(m, p);
        w.blocks.push_back(std::move(b));
    }
    return w;
}

TWord word_of_letters(const std::vector<int>& letters) {
    TWord w;
    w.blocks.reserve(letters.size());
    for (int l : letters) {
        if (l < 1) throw std::invalid_argument("letter must be >= 1");
        w.blocks.emplace_back(l);
    }
    return w;
}

TWord word_of(const Composition& idx) { return word_of_letters(idx.parts); }

TWord prefix_marker(const TWord& w, Marker m, int p) {
    if (p < 0) throw std::invalid_argument("negative marker exponent");
    if (w.is_unit()) {
        if (p == 0) return w;
        throw std::invalid_argument("cannot prefix a marker to the unit word");
    }
    TWord r = w;
    r.blocks.front().add_exponent(m.id, p);
    return r;
}

TWord prepend_block(const Block& b, const TWord& w) {
    TWord r;
    r.blocks.reserve(w.blocks.size() + 1);
    r.blocks.push_back(b);
    r.blocks.insert(r.blocks.end(), w.blocks.begin(), w.blocks.end());
    return r;
}

LinComb prepend_block(const Block& b, const LinComb& x) {
    LinComb r;
    for (const auto& [w, c] : x.terms()) r.add_term(prepend_block(b, w), c);
    return r;
}

std::string to_string(const Block& b) {
    std::string s;
    for (const auto& [id, p] : b.exps) {
        const std::string& name = Marker::name_of(id);
        if (id == Marker::tau().id && p == 1)
            s += name;
        else
            s += name + "^" + std::to_string(p);
        s += ' ';
    }
    s += "z" + std::to_string(b.letter);
    return s;
}

std::string to_string(const TWord& w) {
    if (w.is_unit()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        if (i) s += ' ';
        s += to_string(w.blocks[i]);
    }
    return s;
}

std::string to_string(const LinComb& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            if (a < 0) { s += " - "; a = -a; }
            else s += " + ";
        }
        if (a != 1)
            s += to_string(a) + "*";
        s += to_string(w);
        first = false;
    }
    return s;
}

std::string to_string(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.parts[i]);
    }
    return s;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

} // namespace

TWord parse_word(const std::string& s) {
    auto tokens = split_ws(s);
    if (tokens.size() == 1 && tokens[0] == "1") return TWord{};
    TWord w;
    Block pending(1);
    bool have_markers = false;
    for (const auto& tok : tokens) {
        if (tok.size() >= 2 && tok[0] == 'z' &&
            tok.find_first_not_of("0123456789", 1) == std::string::npos) {
            int letter = std::stoi(tok.substr(1));
            if (letter < 1) throw std::invalid_argument("letter must be >= 1: " + tok);
            pending.letter = letter;
            w.blocks.push_back(pending);
            pending = Block(1);
            have_markers = false;
            continue;
        }
        // marker token: <name> or <name>^<p>
        std::string name = tok;
        int p = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string ps = tok.substr(caret + 1);
            if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad marker power: " + tok);
            p = std::stoi(ps);
        }
        if (name.empty() || name == "z")
            throw std::invalid_argument("bad token in word: " + tok);
        pending.add_exponent(Marker::named(name).id, p);
        have_markers = true;
    }
    if (have_markers)
        throw std::invalid_argument("trailing marker without a letter in: " + s);
    return w;
}

Composition parse_composition(const std::string& s) {
    Composition c;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad composition entry: " + item);
        int v = std::stoi(item);
        if (v < 1) throw std::invalid_argument("composition entries must be >= 1");
        c.parts.push_back(v);
    }
    if (c.parts.empty()) throw std::invalid_argument("empty composition: " + s);
    return c;
}

} // namespace mzv
