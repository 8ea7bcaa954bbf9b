#include <benchmark/benchmark.h>

#include <random>

#include "tagrec/model.hpp"
#include "tagrec/preprocess.hpp"
#include "tagrec/recommend.hpp"
#include "tagrec/semantics.hpp"
#include "tagrec/similarity.hpp"
#include "tagrec/turkish.hpp"

using namespace tagrec;

namespace {

// Synthetic dataset roughly at the scale of a small bookmarking study:
// users * sites_per_user triples over a shared tag vocabulary.
Dataset make_dataset(int users, int sites, int tags, int triples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> du(0, users - 1), ds(0, sites - 1), dt(0, tags - 1);
    Dataset d;
    while (static_cast<int>(d.size()) < triples) {
        d.insert({"u" + std::to_string(du(rng)), "site" + std::to_string(ds(rng)) + ".com",
                  "tag" + std::to_string(dt(rng))});
    }
    return d;
}

SynonymLexicon make_lexicon(int tags, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dt(0, tags - 1);
    SynonymLexicon lex;
    for (int i = 0; i < tags; ++i) {
        lex.add("tag" + std::to_string(i), "tag" + std::to_string(dt(rng)));
        lex.add("tag" + std::to_string(i), "tag" + std::to_string(dt(rng)));
    }
    return lex;
}

void BM_ExpandSynonyms(benchmark::State& state) {
    Dataset d = make_dataset(25, 122, 60, 366, 7);
    SynonymLexicon lex = make_lexicon(60, 11);
    for (auto _ : state) {
        auto [out, report] = expand_synonyms(d, lex);
        benchmark::DoNotOptimize(out.size());
    }
}
BENCHMARK(BM_ExpandSynonyms);

void BM_SimilarityMatrix(benchmark::State& state) {
    Dataset d = make_dataset(25, static_cast<int>(state.range(0)), 60, 366, 7);
    for (auto _ : state) {
        SimilarityMatrix m = build_similarity_matrix(d);
        benchmark::DoNotOptimize(m.pair_count());
    }
}
BENCHMARK(BM_SimilarityMatrix)->Arg(40)->Arg(122);

void BM_RecommendAll(benchmark::State& state) {
    Dataset d = make_dataset(25, 122, 60, 366, 7);
    SimilarityMatrix m = build_similarity_matrix(d);
    for (auto _ : state) {
        auto recs = recommend_all(d, m, 5);
        benchmark::DoNotOptimize(recs.size());
    }
}
BENCHMARK(BM_RecommendAll);

void BM_SpellCorrect(benchmark::State& state) {
    Corpus corpus;
    std::mt19937 rng(3);
    const std::u32string& letters = turkish_alphabet();
    std::uniform_int_distribution<std::size_t> dl(0, letters.size() - 1);
    std::uniform_int_distribution<int> dn(3, 9);
    for (int i = 0; i < 2000; ++i) {
        std::u32string w;
        int n = dn(rng);
        for (int k = 0; k < n; ++k) w.push_back(letters[dl(rng)]);
        corpus.add(utf8_encode(w), 1 + i % 50);
    }
    std::vector<std::string> words(corpus.words().size());
    std::size_t i = 0;
    for (const auto& [w, f] : corpus.words()) words[i++] = w + "x";
    std::size_t j = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spell_correct(words[j++ % words.size()], corpus).corrected);
    }
}
BENCHMARK(BM_SpellCorrect);

} // namespace

BENCHMARK_MAIN();
