#ifndef TAGREC_IO_HPP
#define TAGREC_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "tagrec/metrics.hpp"
#include "tagrec/model.hpp"
#include "tagrec/preprocess.hpp"
#include "tagrec/recommend.hpp"
#include "tagrec/semantics.hpp"
#include "tagrec/similarity.hpp"

namespace tagrec::io {

// All formats are UTF-8, tab-separated, newline-terminated, and written
// with lexicographically sorted rows so outputs are byte-stable.

// One word per line, optionally `word<TAB>frequency`.
Corpus load_corpus(const std::filesystem::path& path);

// One suffix per line; '#' starts a comment.
SuffixTable load_suffix_table(const std::filesystem::path& path);

// `word<TAB>syn1,syn2,...` per line.
SynonymLexicon load_lexicon(const std::filesystem::path& path);

struct RawTriplesFile {
    std::vector<RawRow> rows;
    std::vector<std::string> issues; // malformed lines, with file:line
};

// `user<TAB>url<TAB>tag` per line. Lines with the wrong column count are
// reported, not fatal.
RawTriplesFile load_raw_triples(const std::filesystem::path& path);

// `user<TAB>site<TAB>tag<TAB>provenance` per line; every row must parse.
Dataset load_clean_triples(const std::filesystem::path& path);

// Counts tab-separated columns of the first non-empty line (0 for an
// empty file). Used to tell raw rows from clean ones.
std::size_t detect_column_count(const std::filesystem::path& path);

void write_clean_triples(const std::filesystem::path& path, const Dataset& d);
void write_matrix(const std::filesystem::path& path, const SimilarityMatrix& m);
void write_recommendations(
    const std::filesystem::path& path,
    const std::map<std::string, std::vector<Recommendation>>& recs);

// `user<TAB>accepted<TAB>presented` per line.
std::vector<AcceptanceRecord> load_acceptance(const std::filesystem::path& path);

std::string format_preprocess_report(const PreprocessReport& r);
std::string format_expansion_report(const ExpansionReport& r);
std::string format_acceptance_stats(const AcceptanceStats& s);

void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace tagrec::io

#endif
