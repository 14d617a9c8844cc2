#include "dendro/basis_sets.hpp"

namespace dendro {

SchroederSet schroeder_set(const std::vector<Generator>& alphabet, int max_degree) {
    SchroederSet out;
    for (int deg = 1; deg <= max_degree; ++deg) {
        for (const auto& t : enumerate_schroeder(alphabet, deg + 1)) {
            out.elems.push_back(DTElement::basis(t));
            out.sizes.push_back(deg);
        }
    }
    return out;
}

BinarySet binary_set(const std::vector<Generator>& alphabet, int max_degree) {
    BinarySet out;
    for (int deg = 1; deg <= max_degree; ++deg) {
        for (const auto& t : enumerate_binary(alphabet, deg + 1)) {
            out.elems.push_back(DDElement::basis(t));
            out.sizes.push_back(deg);
        }
    }
    return out;
}

WordSet word_set(const std::vector<DiffMonomial>& letters, int max_length) {
    WordSet out;
    std::vector<std::vector<DiffMonomial>> current;  // words of the previous length
    current.push_back({});
    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::vector<DiffMonomial>> next;
        for (const auto& w : current) {
            for (const auto& l : letters) {
                auto nw = w;
                nw.push_back(l);
                next.push_back(nw);
            }
        }
        for (const auto& w : next) {
            TensorWord word = TensorWord::of(w);
            out.elems.push_back(TElement::basis(word));
            out.sizes.push_back(len);
            out.words.push_back(word);
        }
        current = std::move(next);
    }
    return out;
}

std::vector<DiffMonomial> single_var_letters(const std::vector<std::string>& names,
                                             unsigned max_letter_order) {
    std::vector<DiffMonomial> out;
    for (const auto& n : names)
        for (unsigned k = 0; k <= max_letter_order; ++k) out.push_back(DiffMonomial::var(n, k));
    return out;
}

std::vector<DiffMonomial> monomial_set(const std::vector<DiffVar>& vars, int max_degree,
                                       bool include_unit) {
    std::vector<DiffMonomial> out;
    if (include_unit) out.push_back(DiffMonomial::unit());
    std::vector<DiffMonomial> current = {DiffMonomial::unit()};
    for (int deg = 1; deg <= max_degree; ++deg) {
        std::vector<DiffMonomial> next;
        for (const auto& m : current) {
            // keep factors nondecreasing to avoid duplicates
            for (const auto& v : vars) {
                if (!m.factors.empty() && v < m.factors.back()) continue;
                DiffMonomial nm = m;
                nm.factors.push_back(v);
                next.push_back(nm);
            }
        }
        for (const auto& m : next) out.push_back(m);
        current = std::move(next);
    }
    return out;
}

}  // namespace dendro
