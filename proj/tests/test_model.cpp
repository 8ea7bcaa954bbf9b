#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tagrec/model.hpp"

using namespace tagrec;

TEST_CASE("insert into empty dataset") {
    Dataset d;
    CHECK(d.insert({"u1", "a.com", "haber"}));
    CHECK(d.size() == 1);
}

TEST_CASE("re-inserting the same triple is a no-op that keeps first provenance") {
    Dataset d;
    CHECK(d.insert({"u1", "a.com", "haber", Provenance::Original}));
    CHECK(!d.insert({"u1", "a.com", "haber", Provenance::SynonymAdded}));
    CHECK(d.size() == 1);
    CHECK(d.triples().begin()->second == Provenance::Original);
}

TEST_CASE("user is part of triple identity") {
    Dataset d;
    d.insert({"u1", "a.com", "haber"});
    d.insert({"u2", "a.com", "haber"});
    CHECK(d.size() == 2);
}

TEST_CASE("field invariants are enforced") {
    Dataset d;
    CHECK_THROWS_AS(d.insert({"", "a.com", "haber"}), std::invalid_argument);
    CHECK_THROWS_AS(d.insert({"u1", "", "haber"}), std::invalid_argument);
    CHECK_THROWS_AS(d.insert({"u1", "a.com", "  "}), std::invalid_argument);
    CHECK_THROWS_AS(d.insert({"u1", "a.com", "HABER"}), std::invalid_argument);
    CHECK_THROWS_AS(d.insert({"u1", "a.com", "kitabI"}), std::invalid_argument);
    CHECK(d.empty());
}

TEST_CASE("derived views are consistent") {
    Dataset d;
    d.insert({"u1", "a.com", "haber"});
    d.insert({"u1", "b.com", "spor"});
    d.insert({"u2", "a.com", "spor"});
    CHECK(d.websites() == std::set<std::string>{"a.com", "b.com"});
    CHECK(d.tags() == std::set<std::string>{"haber", "spor"});
    CHECK(d.users() == std::set<std::string>{"u1", "u2"});
    CHECK(d.tags_of("a.com") == std::set<std::string>{"haber", "spor"});
    CHECK(d.sites_of("u1") == std::set<std::string>{"a.com", "b.com"});
    CHECK(d.sites_with_tag("spor") == std::set<std::string>{"a.com", "b.com"});
    CHECK(d.tag_occurrences("spor") == 2);
    CHECK(d.site_tag_users("a.com", "spor") == 1);
    CHECK_THROWS_AS(d.tags_of("missing.com"), std::out_of_range);
    CHECK_THROWS_AS(d.sites_of("nobody"), std::out_of_range);
}

TEST_CASE("view sizes are bounded by triple count") {
    std::mt19937 rng(7);
    auto triples = oracles::random_triples(rng, 6, 10, 12, 60);
    Dataset d = oracles::to_dataset(triples);
    CHECK(d.websites().size() <= d.size());
    CHECK(d.tags().size() <= d.size());
}

TEST_CASE("insertion order does not matter") {
    std::mt19937 rng(11);
    auto triples = oracles::random_triples(rng, 5, 8, 10, 40);
    Dataset a = oracles::to_dataset(triples);
    std::shuffle(triples.begin(), triples.end(), rng);
    Dataset b = oracles::to_dataset(triples);
    CHECK(a.triples() == b.triples());
}

TEST_CASE("tags_of matches a direct scan of the triples") {
    std::mt19937 rng(13);
    auto triples = oracles::random_triples(rng, 5, 8, 10, 50);
    Dataset d = oracles::to_dataset(triples);
    for (const std::string& site : d.websites())
        CHECK(d.tags_of(site) == oracles::tags_of_site(triples, site));
}

TEST_CASE("synonym lexicon drops self-pairs and lowercases") {
    SynonymLexicon lex;
    lex.add("Haber", "DUYURU");
    lex.add("haber", "haber");
    lex.add("haber", "İLAN");
    REQUIRE(lex.find("haber") != nullptr);
    CHECK(*lex.find("haber") == std::set<std::string>{"duyuru", "ilan"});
    CHECK(lex.find("duyuru") == nullptr);
    CHECK(lex.pair_count() == 2);
}

TEST_CASE("corpus keeps the larger frequency and rejects bad entries") {
    Corpus c;
    c.add("Kitap", 5);
    c.add("kitap", 2);
    CHECK(c.frequency("kitap") == 5);
    CHECK(c.contains("kitap"));
    CHECK(!c.contains("kitab"));
    CHECK_THROWS_AS(c.add("  "), std::invalid_argument);
    CHECK_THROWS_AS(c.add("ev", 0), std::invalid_argument);
}
