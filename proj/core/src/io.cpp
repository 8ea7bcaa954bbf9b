#include "tagrec/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tagrec/turkish.hpp"

namespace tagrec::io {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    return in;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line_no,
                          const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

} // namespace

Corpus load_corpus(const std::filesystem::path& path) {
    auto in = open_input(path);
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(chomp(line));
        if (line.empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() > 2) fail_at(path, line_no, "expected `word` or `word<TAB>frequency`");
        long freq = 1;
        if (fields.size() == 2) {
            try {
                freq = std::stol(fields[1]);
            } catch (const std::exception&) {
                fail_at(path, line_no, "bad frequency: " + fields[1]);
            }
            if (freq < 1) fail_at(path, line_no, "frequency must be >= 1");
        }
        corpus.add(fields[0], freq);
    }
    return corpus;
}

SuffixTable load_suffix_table(const std::filesystem::path& path) {
    auto in = open_input(path);
    SuffixTable table;
    std::string line;
    while (std::getline(in, line)) {
        line = chomp(line);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        table.add(line);
    }
    return table;
}

SynonymLexicon load_lexicon(const std::filesystem::path& path) {
    auto in = open_input(path);
    SynonymLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (trim(line).empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 2) fail_at(path, line_no, "expected `word<TAB>syn1,syn2,...`");
        const std::string& word = fields[0];
        std::stringstream syns(fields[1]);
        std::string syn;
        while (std::getline(syns, syn, ',')) lex.add(word, syn);
    }
    return lex;
}

RawTriplesFile load_raw_triples(const std::filesystem::path& path) {
    auto in = open_input(path);
    RawTriplesFile out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (trim(line).empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 3) {
            out.issues.push_back(path.string() + ":" + std::to_string(line_no) +
                                 ": expected `user<TAB>url<TAB>tag`");
            continue;
        }
        out.rows.push_back({fields[0], fields[1], fields[2]});
    }
    return out;
}

Dataset load_clean_triples(const std::filesystem::path& path) {
    auto in = open_input(path);
    Dataset d;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (trim(line).empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 4)
            fail_at(path, line_no, "expected `user<TAB>site<TAB>tag<TAB>provenance`");
        try {
            d.insert({fields[0], fields[1], fields[2], provenance_from_string(fields[3])});
        } catch (const std::invalid_argument& e) {
            fail_at(path, line_no, e.what());
        }
    }
    return d;
}

std::size_t detect_column_count(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::string line;
    while (std::getline(in, line)) {
        line = chomp(line);
        if (trim(line).empty()) continue;
        return split_tabs(line).size();
    }
    return 0;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_clean_triples(const std::filesystem::path& path, const Dataset& d) {
    std::string text;
    for (const auto& [t, prov] : d.triples()) {
        text += t.user;
        text += '\t';
        text += t.site;
        text += '\t';
        text += t.tag;
        text += '\t';
        text += to_string(prov);
        text += '\n';
    }
    write_text(path, text);
}

void write_matrix(const std::filesystem::path& path, const SimilarityMatrix& m) {
    std::string text;
    for (const auto& [pair, score] : m.scores()) {
        text += pair.first;
        text += '\t';
        text += pair.second;
        text += '\t';
        text += fixed6(score);
        text += '\n';
    }
    write_text(path, text);
}

void write_recommendations(
    const std::filesystem::path& path,
    const std::map<std::string, std::vector<Recommendation>>& recs) {
    std::string text;
    for (const auto& [user, list] : recs) {
        for (const Recommendation& r : list) {
            text += user;
            text += '\t';
            text += std::to_string(r.rank);
            text += '\t';
            text += r.site;
            text += '\t';
            text += fixed6(r.score);
            text += '\n';
        }
    }
    write_text(path, text);
}

std::vector<AcceptanceRecord> load_acceptance(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::vector<AcceptanceRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (trim(line).empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 3)
            fail_at(path, line_no, "expected `user<TAB>accepted<TAB>presented`");
        AcceptanceRecord r;
        r.user = fields[0];
        try {
            r.accepted = std::stoi(fields[1]);
            r.presented = std::stoi(fields[2]);
        } catch (const std::exception&) {
            fail_at(path, line_no, "bad count");
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::string format_preprocess_report(const PreprocessReport& r) {
    std::string text;
    text += "rows_read: " + std::to_string(r.rows_read) + "\n";
    text += "malformed_rows: " + std::to_string(r.malformed.size()) + "\n";
    text += "spell_corrections: " + std::to_string(r.spell_corrections) + "\n";
    text += "stems_changed: " + std::to_string(r.stems_changed) + "\n";
    text += "urls_rewritten: " + std::to_string(r.urls_rewritten) + "\n";
    text += "duplicates_collapsed: " + std::to_string(r.duplicates_collapsed) + "\n";
    for (const std::string& m : r.malformed) text += "malformed: " + m + "\n";
    return text;
}

std::string format_expansion_report(const ExpansionReport& r) {
    std::string text;
    text += "original_triples: " + std::to_string(r.original_triple_count) + "\n";
    text += "added_triples: " + std::to_string(r.added_count) + "\n";
    text += "percent_increase: " + fixed(100.0 * r.percent_increase, 1) + "\n";
    return text;
}

std::string format_acceptance_stats(const AcceptanceStats& s) {
    std::string text;
    text += "users: " + std::to_string(s.user_count) + "\n";
    text += "mean_accepted: " + fixed(s.mean_accepted, 3) + "\n";
    text += "sem: " + fixed(s.sem, 3) + "\n";
    text += "percent_accepted: " + fixed(s.percent_accepted, 1) + "\n";
    text += "threshold: " + fixed(s.threshold, 2) + "\n";
    text += "percent_succeeded: " + fixed(s.percent_succeeded, 1) + "\n";
    return text;
}

} // namespace tagrec::io
