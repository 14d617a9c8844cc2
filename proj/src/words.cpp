#include "dendro/words.hpp"

#include <cctype>

#include "dendro/errors.hpp"

namespace dendro {

std::string TensorWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += " (x) ";
        out += letters[i].str();
    }
    return out;
}

std::string to_string(const TensorWord& w) { return w.str(); }

TensorWord parse_word(std::string_view text) {
    std::vector<DiffMonomial> letters;
    std::size_t start = 0;
    while (true) {
        std::size_t sep = text.find("(x)", start);
        std::string_view piece =
            sep == std::string_view::npos ? text.substr(start) : text.substr(start, sep - start);
        std::size_t a = 0, b = piece.size();
        while (a < b && std::isspace(static_cast<unsigned char>(piece[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(piece[b - 1]))) --b;
        if (a == b) throw ParseError(start, "monomial");
        letters.push_back(parse_monomial(piece.substr(a, b - a)));
        if (sep == std::string_view::npos) break;
        start = sep + 3;
    }
    return TensorWord::of(std::move(letters));
}

std::string render(const TElement& x) {
    return render_lincomb(x, [](const TensorWord& w) { return w.str(); });
}

namespace {

// Words inside the recursion may be transiently empty: the empty word acts as
// the unit of the quasi-shuffle and never escapes into a TElement.
using Letters = std::vector<DiffMonomial>;
using RawComb = std::map<Letters, Scalar>;

void raw_add(RawComb& m, Letters w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

RawComb prepended(const DiffMonomial& head, const RawComb& tail) {
    RawComb out;
    for (const auto& [w, c] : tail) {
        Letters nw;
        nw.reserve(w.size() + 1);
        nw.push_back(head);
        nw.insert(nw.end(), w.begin(), w.end());
        out.emplace(std::move(nw), c);
    }
    return out;
}

RawComb star_raw(const QShuffleAlgebra& alg, const Letters& a, const Letters& b) {
    RawComb out;
    if (a.empty()) {
        out.emplace(b, Scalar::one());
        return out;
    }
    if (b.empty()) {
        out.emplace(a, Scalar::one());
        return out;
    }
    Letters atail(a.begin() + 1, a.end());
    Letters btail(b.begin() + 1, b.end());
    for (auto& [w, c] : prepended(a[0], star_raw(alg, atail, b))) raw_add(out, std::move(w), c);
    for (auto& [w, c] : prepended(b[0], star_raw(alg, a, btail))) raw_add(out, std::move(w), c);
    if (!alg.bullet_forced_zero) {
        for (auto& [w, c] : prepended(a[0].times(b[0]), star_raw(alg, atail, btail)))
            raw_add(out, std::move(w), c * alg.q);
    }
    return out;
}

TElement to_element(const RawComb& raw) {
    TElement out;
    for (const auto& [w, c] : raw) out.add_term(TensorWord::of(w), c);
    return out;
}

}  // namespace

TElement QShuffleAlgebra::star(const TElement& x, const TElement& y) const {
    return bilinear_extend(
        [&](const TensorWord& a, const TensorWord& b) {
            return to_element(star_raw(*this, a.letters, b.letters));
        },
        x, y);
}

TElement QShuffleAlgebra::prec(const TElement& x, const TElement& y) const {
    return bilinear_extend(
        [&](const TensorWord& a, const TensorWord& b) {
            Letters atail(a.letters.begin() + 1, a.letters.end());
            return to_element(prepended(a.letters[0], star_raw(*this, atail, b.letters)));
        },
        x, y);
}

TElement QShuffleAlgebra::succ(const TElement& x, const TElement& y) const {
    return bilinear_extend(
        [&](const TensorWord& a, const TensorWord& b) {
            Letters btail(b.letters.begin() + 1, b.letters.end());
            return to_element(prepended(b.letters[0], star_raw(*this, a.letters, btail)));
        },
        x, y);
}

TElement QShuffleAlgebra::bullet(const TElement& x, const TElement& y) const {
    if (bullet_forced_zero) return {};
    return bilinear_extend(
        [&](const TensorWord& a, const TensorWord& b) {
            Letters atail(a.letters.begin() + 1, a.letters.end());
            Letters btail(b.letters.begin() + 1, b.letters.end());
            return to_element(
                prepended(a.letters[0].times(b.letters[0]), star_raw(*this, atail, btail)));
        },
        x, y);
}

TElement QShuffleAlgebra::d(const TElement& x) const {
    auto d_word = [&](const TensorWord& w) {
        TElement out;
        const std::size_t m = w.letters.size();
        if (m >= 63) throw Error("word with " + std::to_string(m) + " letters is too large to derive");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            unsigned picked = 0;
            // expand the selected positions multilinearly over the monomial basis
            RawComb partial;
            partial.emplace(Letters{}, Scalar::one());
            for (std::size_t i = 0; i < m; ++i) {
                RawComb next;
                if (mask & (std::uint64_t{1} << i)) {
                    ++picked;
                    DiffPoly dm = d0_monomial(w.letters[i], max_order, lam);
                    for (const auto& [prefix, c] : partial) {
                        for (const auto& [mono, mc] : dm.terms()) {
                            Letters nw = prefix;
                            nw.push_back(mono);
                            raw_add(next, std::move(nw), c * mc);
                        }
                    }
                } else {
                    for (const auto& [prefix, c] : partial) {
                        Letters nw = prefix;
                        nw.push_back(w.letters[i]);
                        raw_add(next, std::move(nw), c);
                    }
                }
                partial = std::move(next);
            }
            Scalar weight = lam.pow(picked - 1);
            for (const auto& [word, c] : partial) out.add_term(TensorWord::of(word), c * weight);
        }
        return out;
    };
    return linear_extend(d_word, x);
}

TElement QShuffleAlgebra::embed(const DiffPoly& p) const {
    TElement out;
    for (const auto& [m, c] : p.terms()) out.add_term(TensorWord::letter(m), c);
    return out;
}

}  // namespace dendro
