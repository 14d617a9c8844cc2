#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dendro/diffpoly.hpp"

namespace dendro {

/// Nonempty tensor word of differential monomials; basis of T+(A).
struct TensorWord {
    std::vector<DiffMonomial> letters;

    static TensorWord of(std::vector<DiffMonomial> ls) { return TensorWord{std::move(ls)}; }
    static TensorWord letter(DiffMonomial m) { return TensorWord{{std::move(m)}}; }

    int length() const { return static_cast<int>(letters.size()); }

    std::string str() const;

    friend bool operator==(const TensorWord&, const TensorWord&) = default;
    friend bool operator<(const TensorWord& a, const TensorWord& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

using TElement = LinComb<TensorWord>;

std::string to_string(const TensorWord& w);
TensorWord parse_word(std::string_view text);
std::string render(const TElement& x);

/// T+(A) with the weight-q quasi-shuffle product, the three induced
/// dendriform-type operations and the extended derivation. lam and q may be
/// formal or substituted; bullet_forced_zero gives the shuffle/dendriform
/// specialization (q = 0 with a vanishing middle product).
struct QShuffleAlgebra {
    Scalar lam = Scalar::lam();
    Scalar q = Scalar::q();
    unsigned max_order = kDefaultMaxOrder;
    bool bullet_forced_zero = false;

    TElement star(const TElement& x, const TElement& y) const;
    TElement prec(const TElement& x, const TElement& y) const;
    TElement succ(const TElement& x, const TElement& y) const;
    TElement bullet(const TElement& x, const TElement& y) const;
    TElement d(const TElement& x) const;

    TElement embed(const DiffPoly& p) const;  // A -> T+(A), length-1 words
};

/// Universal extension of a differential-algebra morphism psi : A -> T to
/// T+(A) -> T via the leftmost-letter decomposition. The target supplies
/// Element, prec(Element,Element) and d(Element); psi gives the image of each
/// monomial. Throws MorphismPrecondition when d_T(psi(a)) != psi(d0(a)) for a
/// letter encountered, with d0 taken at the source algebra's weight.
template <class Target>
typename Target::Element psi_bar(
    const QShuffleAlgebra& src, const Target& target,
    const std::function<typename Target::Element(const DiffMonomial&)>& psi, const TElement& x) {
    using Elem = typename Target::Element;
    std::map<DiffMonomial, Elem> images;
    auto image = [&](const DiffMonomial& m) -> const Elem& {
        auto it = images.find(m);
        if (it != images.end()) return it->second;
        Elem im = psi(m);
        Elem lhs = target.d(im);
        Elem rhs;
        DiffPoly dm = d0_monomial(m, src.max_order, src.lam);
        for (const auto& [mono, c] : dm.terms()) rhs += psi(mono).scaled(c);
        if (!(lhs == rhs))
            throw MorphismPrecondition("psi does not intertwine the derivations on generator " +
                                       m.str());
        return images.emplace(m, std::move(im)).first->second;
    };
    auto eval_word = [&](auto&& self, const std::vector<DiffMonomial>& ls, std::size_t from) -> Elem {
        if (from + 1 == ls.size()) return image(ls[from]);
        return target.prec(image(ls[from]), self(self, ls, from + 1));
    };
    Elem out;
    for (const auto& [w, c] : x.terms()) out += eval_word(eval_word, w.letters, 0).scaled(c);
    return out;
}

/// T+(A) viewed as its own universal target.
struct QShuffleSelfTarget {
    using Element = TElement;
    const QShuffleAlgebra* alg;

    Element prec(const Element& a, const Element& b) const { return alg->prec(a, b); }
    Element succ(const Element& a, const Element& b) const { return alg->succ(a, b); }
    Element bullet(const Element& a, const Element& b) const { return alg->bullet(a, b); }
    Element d(const Element& a) const { return alg->d(a); }
};

}  // namespace dendro
