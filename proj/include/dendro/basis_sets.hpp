#pragma once

#include <vector>

#include "dendro/dend.hpp"
#include "dendro/tridend.hpp"
#include "dendro/words.hpp"

namespace dendro {

// Flat basis listings with their sizes (degree for trees, length for words),
// the raw material of size-bounded tuple grids.

struct SchroederSet {
    std::vector<DTElement> elems;
    std::vector<int> sizes;
};

struct BinarySet {
    std::vector<DDElement> elems;
    std::vector<int> sizes;
};

struct WordSet {
    std::vector<TElement> elems;
    std::vector<int> sizes;
    std::vector<TensorWord> words;
};

SchroederSet schroeder_set(const std::vector<Generator>& alphabet, int max_degree);
BinarySet binary_set(const std::vector<Generator>& alphabet, int max_degree);

/// All words of length <= max_length over the given letters.
WordSet word_set(const std::vector<DiffMonomial>& letters, int max_length);

/// Single-variable letters name^(0..max_letter_order) for each name.
std::vector<DiffMonomial> single_var_letters(const std::vector<std::string>& names,
                                             unsigned max_letter_order);

/// All monomials of degree <= max_degree over the given variables (unit
/// excluded when include_unit is off).
std::vector<DiffMonomial> monomial_set(const std::vector<DiffVar>& vars, int max_degree,
                                       bool include_unit = true);

}  // namespace dendro
