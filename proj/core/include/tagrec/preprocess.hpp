#ifndef TAGREC_PREPROCESS_HPP
#define TAGREC_PREPROCESS_HPP

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tagrec/model.hpp"

namespace tagrec {

// Suffixes to strip, kept ordered longest-first (ties lexicographic).
// Lengths are in code points, not bytes.
struct SuffixTable {
    std::vector<std::string> suffixes;
    std::size_t min_stem_length = 2;

    void add(std::string_view suffix);

    // Common Turkish inflectional suffixes: plural, case, possessive.
    static SuffixTable default_turkish();
};

// All strings at Damerau-Levenshtein distance exactly 1 from word:
// single insertion, deletion, replacement (different letter only) and
// adjacent transposition, over the Turkish alphabet.
std::set<std::string> generate_edits1(std::string_view word);

struct SpellResult {
    std::string word;
    bool corrected = false;
};

// Noisy-channel correction with one-edit candidates. In-corpus words are
// returned untouched; otherwise the distance-1 candidate with the highest
// corpus frequency wins, ties broken by Turkish collation. No candidate
// means the word passes through unchanged.
SpellResult spell_correct(std::string_view word, const Corpus& corpus);

// Canonicalizes URL spellings: trims, drops the fragment, strips the
// scheme and leading "www.", lowercases the host, removes a terminal
// default-index segment and trailing slashes. Throws std::invalid_argument
// when the input normalizes to nothing.
std::string normalize_url(std::string_view raw);

// Longest-match suffix stripping, repeated until no suffix applies.
// A strip is vetoed when it would turn a corpus word into a non-corpus
// word or leave a stem shorter than min_stem_length.
std::string stem(std::string_view tag, const SuffixTable& table, const Corpus& corpus);

struct RawRow {
    std::string user;
    std::string url;
    std::string tag;
};

struct PreprocessOptions {
    bool spellcheck = true;
    bool stemming = true;
};

struct PreprocessReport {
    std::size_t rows_read = 0;
    std::size_t spell_corrections = 0;
    std::size_t stems_changed = 0;
    std::size_t urls_rewritten = 0;
    std::size_t duplicates_collapsed = 0;
    std::vector<std::string> malformed; // one message per rejected row
};

// Full cleanup of raw rows: lowercase tag, spell-correct, stem,
// normalize URL, deduplicate. Malformed rows land in the report.
std::pair<Dataset, PreprocessReport> preprocess_dataset(
    std::span<const RawRow> rows, const Corpus& corpus, const SuffixTable& table,
    const PreprocessOptions& options = {});

} // namespace tagrec

#endif
