#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "tagrec/io.hpp"

using namespace tagrec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("tagrec_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("corpus loads plain and frequency lines") {
    TempDir tmp;
    auto p = tmp.file("corpus.txt", "kitap\t120\nEV\nhaber\t40\n\n");
    Corpus c = io::load_corpus(p);
    CHECK(c.size() == 3);
    CHECK(c.frequency("kitap") == 120);
    CHECK(c.frequency("ev") == 1);
    auto bad = tmp.file("bad.txt", "kitap\tnope\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(io::load_corpus(bad)),
                         doctest::Contains("bad.txt:1"), std::runtime_error);
}

TEST_CASE("suffix table file supports comments") {
    TempDir tmp;
    auto p = tmp.file("suffixes.txt", "# plural\nlar\nler # ince\n\nde\n");
    SuffixTable t = io::load_suffix_table(p);
    CHECK(t.suffixes == std::vector<std::string>{"lar", "ler", "de"});
}

TEST_CASE("lexicon loads comma-separated synonyms") {
    TempDir tmp;
    auto p = tmp.file("syn.tsv", "haber\tduyuru,ilan\nkitap\teser\n");
    SynonymLexicon lex = io::load_lexicon(p);
    CHECK(*lex.find("haber") == std::set<std::string>{"duyuru", "ilan"});
    CHECK(*lex.find("kitap") == std::set<std::string>{"eser"});
    auto bad = tmp.file("bad.tsv", "tek-kolon\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(io::load_lexicon(bad)),
                         doctest::Contains("bad.tsv:1"), std::runtime_error);
}

TEST_CASE("raw triples loader reports malformed lines with positions") {
    TempDir tmp;
    auto p = tmp.file("raw.tsv", "u1\ta.com\thaber\nbroken line\nu2\tb.com\tspor\n");
    io::RawTriplesFile f = io::load_raw_triples(p);
    CHECK(f.rows.size() == 2);
    REQUIRE(f.issues.size() == 1);
    CHECK(f.issues[0].find(":2:") != std::string::npos);
    CHECK_THROWS_AS(static_cast<void>(io::load_raw_triples(tmp.path / "missing.tsv")),
                    std::runtime_error);
}

TEST_CASE("clean triples round-trip and stay sorted") {
    TempDir tmp;
    Dataset d;
    d.insert({"u2", "b.com", "spor", Provenance::Stemmed});
    d.insert({"u1", "a.com", "haber", Provenance::Original});
    d.insert({"u1", "a.com", "duyuru", Provenance::SynonymAdded});
    fs::path p = tmp.path / "clean.tsv";
    io::write_clean_triples(p, d);
    std::string text = slurp(p);
    CHECK(text ==
          "u1\ta.com\tduyuru\tsynonym_added\n"
          "u1\ta.com\thaber\toriginal\n"
          "u2\tb.com\tspor\tstemmed\n");
    Dataset back = io::load_clean_triples(p);
    CHECK(back.triples() == d.triples());
}

TEST_CASE("column detection distinguishes raw from clean files") {
    TempDir tmp;
    CHECK(io::detect_column_count(tmp.file("raw.tsv", "u\ta.com\tt\n")) == 3);
    CHECK(io::detect_column_count(tmp.file("clean.tsv", "u\ta.com\tt\toriginal\n")) == 4);
    CHECK(io::detect_column_count(tmp.file("empty.tsv", "\n\n")) == 0);
}

TEST_CASE("matrix dump prints six decimals, sorted pairs") {
    TempDir tmp;
    SimilarityMatrix m;
    m.set("b.com", "a.com", 0.5);
    m.set("a.com", "c.com", 1.0 / 3.0);
    fs::path p = tmp.path / "matrix.tsv";
    io::write_matrix(p, m);
    CHECK(slurp(p) == "a.com\tb.com\t0.500000\na.com\tc.com\t0.333333\n");
}

TEST_CASE("recommendation file format") {
    TempDir tmp;
    std::map<std::string, std::vector<Recommendation>> recs;
    recs["u1"] = {{"u1", "x.com", 0.75, 1}, {"u1", "y.com", 0.25, 2}};
    recs["u2"] = {};
    fs::path p = tmp.path / "recs.tsv";
    io::write_recommendations(p, recs);
    CHECK(slurp(p) == "u1\t1\tx.com\t0.750000\nu1\t2\ty.com\t0.250000\n");
}

TEST_CASE("acceptance loader and stats formatting") {
    TempDir tmp;
    auto p = tmp.file("acc.tsv", "u1\t4\t5\nu2\t3\t5\n");
    auto records = io::load_acceptance(p);
    REQUIRE(records.size() == 2);
    CHECK(records[0].accepted == 4);
    auto stats = acceptance_stats(records, 3.6);
    std::string block = io::format_acceptance_stats(stats);
    CHECK(block.find("users: 2\n") != std::string::npos);
    CHECK(block.find("mean_accepted: 3.500\n") != std::string::npos);
    CHECK(block.find("percent_accepted: 70.0\n") != std::string::npos);
    CHECK(block.find("percent_succeeded: 50.0\n") != std::string::npos);

    auto bad = tmp.file("bad.tsv", "u1\t4\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(io::load_acceptance(bad)),
                         doctest::Contains("bad.tsv:1"), std::runtime_error);
}

TEST_CASE("expansion report formats the percent increase") {
    ExpansionReport r;
    r.original_triple_count = 366;
    r.added_count = 68;
    r.percent_increase = 68.0 / 366.0;
    std::string text = io::format_expansion_report(r);
    CHECK(text.find("original_triples: 366\n") != std::string::npos);
    CHECK(text.find("added_triples: 68\n") != std::string::npos);
    CHECK(text.find("percent_increase: 18.6\n") != std::string::npos);
}
