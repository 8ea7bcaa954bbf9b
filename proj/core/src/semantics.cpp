#include "tagrec/semantics.hpp"

namespace tagrec {

std::pair<Dataset, ExpansionReport> expand_synonyms(const Dataset& d,
                                                    const SynonymLexicon& lex) {
    Dataset out;
    for (const auto& [t, prov] : d.triples()) {
        Triple copy = t;
        copy.provenance = prov;
        out.insert(copy);
    }

    ExpansionReport report;
    report.original_triple_count = d.size();

    for (const auto& [t, prov] : d.triples()) {
        const std::set<std::string>* syns = lex.find(t.tag);
        if (!syns) continue;
        for (const std::string& syn : *syns) {
            if (!d.has_tag(syn)) continue; // synonym must already be a tag
            if (out.insert({t.user, t.site, syn, Provenance::SynonymAdded}))
                ++report.added_count;
        }
    }

    report.percent_increase =
        report.original_triple_count == 0
            ? 0.0
            : static_cast<double>(report.added_count) /
                  static_cast<double>(report.original_triple_count);
    return {std::move(out), report};
}

} // namespace tagrec
