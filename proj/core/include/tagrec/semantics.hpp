#ifndef TAGREC_SEMANTICS_HPP
#define TAGREC_SEMANTICS_HPP

#include <cstddef>
#include <utility>

#include "tagrec/model.hpp"

namespace tagrec {

struct ExpansionReport {
    std::size_t added_count = 0;
    std::size_t original_triple_count = 0;
    // added_count / original_triple_count, 0 when the input is empty.
    double percent_increase = 0.0;
};

// Single-pass synonym expansion: for every original triple (u, w, t) and
// every synonym s of t, add (u, w, s) when s already occurs as a tag in
// the original dataset. Added triples are never re-expanded, so synonym
// chains are not followed. Membership checks run against the original
// snapshot; iteration order cannot change the result.
std::pair<Dataset, ExpansionReport> expand_synonyms(const Dataset& d,
                                                    const SynonymLexicon& lex);

} // namespace tagrec

#endif
