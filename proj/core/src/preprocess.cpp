#include "tagrec/preprocess.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "tagrec/turkish.hpp"

namespace tagrec {

namespace {

std::size_t codepoint_length(std::string_view s) { return utf8_decode(s).size(); }

bool suffix_order(const std::string& a, const std::string& b) {
    std::size_t la = codepoint_length(a), lb = codepoint_length(b);
    if (la != lb) return la > lb;
    return a < b;
}

} // namespace

void SuffixTable::add(std::string_view suffix) {
    std::string s = turkish_lowercase(trim(suffix));
    if (s.empty()) throw std::invalid_argument("empty suffix");
    auto pos = std::lower_bound(suffixes.begin(), suffixes.end(), s, suffix_order);
    if (pos != suffixes.end() && *pos == s) return;
    suffixes.insert(pos, s);
}

SuffixTable SuffixTable::default_turkish() {
    SuffixTable t;
    for (const char* s :
         {"lar", "ler",                                  // plural
          "de", "da", "te", "ta", "den", "dan",          // locative, ablative
          "e", "a", "i", "ı", "u", "ü",                  // dative, accusative
          "im", "ım", "um", "üm", "in", "ın", "un", "ün", // possessive
          "si", "sı", "su", "sü"})
        t.add(s);
    return t;
}

std::set<std::string> generate_edits1(std::string_view word) {
    if (word.empty()) throw std::invalid_argument("empty word");
    const std::u32string w = utf8_decode(word);
    const std::u32string& letters = turkish_alphabet();
    std::set<std::string> out;
    const std::size_t n = w.size();

    for (std::size_t i = 0; i <= n; ++i) {
        // insertion at i
        for (char32_t c : letters) {
            std::u32string v = w;
            v.insert(v.begin() + static_cast<long>(i), c);
            out.insert(utf8_encode(v));
        }
        if (i == n) continue;
        // deletion of i
        if (n > 1) {
            std::u32string v = w;
            v.erase(v.begin() + static_cast<long>(i));
            out.insert(utf8_encode(v));
        }
        // replacement at i with a different letter
        for (char32_t c : letters) {
            if (c == w[i]) continue;
            std::u32string v = w;
            v[i] = c;
            out.insert(utf8_encode(v));
        }
        // transposition of i, i+1
        if (i + 1 < n && w[i] != w[i + 1]) {
            std::u32string v = w;
            std::swap(v[i], v[i + 1]);
            out.insert(utf8_encode(v));
        }
    }
    out.erase(std::string(word));
    return out;
}

SpellResult spell_correct(std::string_view word, const Corpus& corpus) {
    std::string w(word);
    if (w.empty()) throw std::invalid_argument("empty word");
    if (corpus.contains(w)) return {w, false};

    std::string best;
    long best_freq = 0;
    for (const std::string& cand : generate_edits1(w)) {
        long f = corpus.frequency(cand);
        if (f == 0) continue;
        if (f > best_freq ||
            (f == best_freq && turkish_collate_less(cand, best))) {
            best = cand;
            best_freq = f;
        }
    }
    if (best.empty()) return {w, false};
    return {best, true};
}

namespace {

bool iequals_ascii(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

bool strip_index_segment(std::string& url) {
    static constexpr std::array<std::string_view, 5> kIndexNames = {
        "index.html", "index.htm", "index.php", "default.asp", "default.aspx"};
    auto slash = url.rfind('/');
    if (slash == std::string::npos) return false;
    std::string_view last = std::string_view(url).substr(slash + 1);
    for (std::string_view name : kIndexNames) {
        if (iequals_ascii(last, name)) {
            url.erase(slash);
            return true;
        }
    }
    return false;
}

} // namespace

std::string normalize_url(std::string_view raw) {
    std::string url = trim(raw);

    if (auto hash = url.find('#'); hash != std::string::npos) url.erase(hash);

    for (std::string_view scheme : {"https://", "http://"}) {
        if (url.size() >= scheme.size() &&
            iequals_ascii(std::string_view(url).substr(0, scheme.size()), scheme)) {
            url.erase(0, scheme.size());
            break;
        }
    }

    auto host_end = url.find('/');
    if (host_end == std::string::npos) host_end = url.size();
    for (std::size_t i = 0; i < host_end; ++i)
        url[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(url[i])));

    if (url.rfind("www.", 0) == 0) url.erase(0, 4);

    // Trailing slashes and default-index segments can nest; iterate to a
    // fixed point so normalization stays idempotent.
    for (;;) {
        std::size_t before = url.size();
        while (!url.empty() && url.back() == '/') url.pop_back();
        strip_index_segment(url);
        if (url.size() == before) break;
    }

    if (url.empty()) throw std::invalid_argument("URL normalizes to empty: '" + std::string(raw) + "'");
    return url;
}

std::string stem(std::string_view tag, const SuffixTable& table, const Corpus& corpus) {
    std::u32string word = utf8_decode(tag);
    for (;;) {
        std::string current = utf8_encode(word);
        bool in_corpus = corpus.contains(current);
        bool stripped = false;
        for (const std::string& suffix : table.suffixes) {
            std::u32string suf = utf8_decode(suffix);
            if (suf.size() >= word.size()) continue;
            if (word.size() - suf.size() < table.min_stem_length) continue;
            if (!std::equal(suf.rbegin(), suf.rend(), word.rbegin())) continue;
            std::u32string candidate = word.substr(0, word.size() - suf.size());
            if (in_corpus && !corpus.contains(utf8_encode(candidate))) continue; // veto
            word = std::move(candidate);
            stripped = true;
            break;
        }
        if (!stripped) break;
    }
    return utf8_encode(word);
}

std::pair<Dataset, PreprocessReport> preprocess_dataset(
    std::span<const RawRow> rows, const Corpus& corpus, const SuffixTable& table,
    const PreprocessOptions& options) {
    Dataset out;
    PreprocessReport report;
    for (const RawRow& row : rows) {
        ++report.rows_read;
        std::string user = trim(row.user);
        std::string raw_url = trim(row.url);
        std::string tag = turkish_lowercase(trim(row.tag));
        if (user.empty() || raw_url.empty() || tag.empty()) {
            report.malformed.push_back("row " + std::to_string(report.rows_read) +
                                       ": empty field");
            continue;
        }

        Provenance prov = Provenance::Original;
        if (options.spellcheck) {
            SpellResult r = spell_correct(tag, corpus);
            if (r.corrected) {
                tag = std::move(r.word);
                ++report.spell_corrections;
                prov = Provenance::SpellCorrected;
            }
        }
        if (options.stemming) {
            std::string stemmed = stem(tag, table, corpus);
            if (stemmed != tag) {
                tag = std::move(stemmed);
                ++report.stems_changed;
                prov = Provenance::Stemmed;
            }
        }

        std::string site;
        try {
            site = normalize_url(raw_url);
        } catch (const std::invalid_argument& e) {
            report.malformed.push_back("row " + std::to_string(report.rows_read) +
                                       ": " + e.what());
            continue;
        }
        if (site != raw_url) ++report.urls_rewritten;

        if (!out.insert({user, site, tag, prov})) ++report.duplicates_collapsed;
    }
    return {std::move(out), std::move(report)};
}

} // namespace tagrec
