// tagrec: deterministic tag-based website recommendation pipeline for
// Turkish bookmarking data.
//
// Subcommands: preprocess, expand, recommend, evaluate, pipeline.
// All outputs are byte-stable TSV/text files under --out-dir.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "tagrec/io.hpp"
#include "tagrec/metrics.hpp"
#include "tagrec/model.hpp"
#include "tagrec/preprocess.hpp"
#include "tagrec/recommend.hpp"
#include "tagrec/semantics.hpp"
#include "tagrec/similarity.hpp"

namespace fs = std::filesystem;
using namespace tagrec;

namespace {

struct Options {
    std::string triples, corpus, thesaurus, suffixes, acceptance;
    std::string out_dir = ".";
    int top_n = 5;
    std::string aggregate = "max";
    bool no_spellcheck = false;
    bool no_stem = false;
    bool no_synonyms = false;
    bool dump_matrix = false;
    double threshold = 3.6;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out-dir", opt.out_dir, "Directory for output files");
}

fs::path out_path(const Options& opt, const char* name) {
    fs::create_directories(opt.out_dir);
    return fs::path(opt.out_dir) / name;
}

struct PreprocessInputs {
    Corpus corpus;
    SuffixTable table;
};

PreprocessInputs load_preprocess_inputs(const Options& opt) {
    PreprocessInputs in;
    if (!opt.corpus.empty()) in.corpus = io::load_corpus(opt.corpus);
    else if (!opt.no_spellcheck)
        throw std::runtime_error("--corpus is required unless --no-spellcheck is given");
    in.table = opt.suffixes.empty() ? SuffixTable::default_turkish()
                                    : io::load_suffix_table(opt.suffixes);
    return in;
}

std::pair<Dataset, PreprocessReport> run_preprocess(const Options& opt) {
    PreprocessInputs in = load_preprocess_inputs(opt);
    io::RawTriplesFile raw = io::load_raw_triples(opt.triples);
    PreprocessOptions popt;
    popt.spellcheck = !opt.no_spellcheck;
    popt.stemming = !opt.no_stem;
    auto [dataset, report] = preprocess_dataset(raw.rows, in.corpus, in.table, popt);
    report.malformed.insert(report.malformed.begin(), raw.issues.begin(), raw.issues.end());
    return {std::move(dataset), std::move(report)};
}

Dataset load_dataset_any(const Options& opt, PreprocessReport* report) {
    std::size_t cols = io::detect_column_count(opt.triples);
    if (cols == 4) return io::load_clean_triples(opt.triples);
    auto [dataset, rep] = run_preprocess(opt);
    if (report) *report = std::move(rep);
    return std::move(dataset);
}

int cmd_preprocess(const Options& opt) {
    auto [dataset, report] = run_preprocess(opt);
    io::write_clean_triples(out_path(opt, "clean_triples.tsv"), dataset);
    io::write_text(out_path(opt, "preprocess_report.txt"),
                   io::format_preprocess_report(report));
    return 0;
}

int cmd_expand(const Options& opt) {
    Dataset dataset = load_dataset_any(opt, nullptr);
    SynonymLexicon lex = io::load_lexicon(opt.thesaurus);
    auto [expanded, report] = expand_synonyms(dataset, lex);
    io::write_clean_triples(out_path(opt, "expanded_triples.tsv"), expanded);
    io::write_text(out_path(opt, "expansion_report.txt"),
                   io::format_expansion_report(report));
    return 0;
}

int run_recommend(const Options& opt, bool full_pipeline) {
    PreprocessReport pre_report;
    Dataset dataset;
    if (full_pipeline) {
        auto [d, rep] = run_preprocess(opt);
        dataset = std::move(d);
        pre_report = std::move(rep);
        io::write_clean_triples(out_path(opt, "clean_triples.tsv"), dataset);
        io::write_text(out_path(opt, "preprocess_report.txt"),
                       io::format_preprocess_report(pre_report));
    } else {
        dataset = load_dataset_any(opt, &pre_report);
    }

    if (dataset.websites().empty())
        throw std::runtime_error("dataset has no websites; nothing to recommend");

    ExpansionReport exp_report;
    exp_report.original_triple_count = dataset.size();
    if (!opt.no_synonyms) {
        if (opt.thesaurus.empty())
            throw std::runtime_error("--thesaurus is required unless --no-synonyms is given");
        SynonymLexicon lex = io::load_lexicon(opt.thesaurus);
        auto [expanded, rep] = expand_synonyms(dataset, lex);
        dataset = std::move(expanded);
        exp_report = rep;
        if (full_pipeline)
            io::write_clean_triples(out_path(opt, "expanded_triples.tsv"), dataset);
    }
    io::write_text(out_path(opt, "expansion_report.txt"),
                   io::format_expansion_report(exp_report));

    SimilarityMatrix matrix = build_similarity_matrix(dataset);
    if (opt.dump_matrix) io::write_matrix(out_path(opt, "similarity.tsv"), matrix);

    auto recs = recommend_all(dataset, matrix, opt.top_n,
                              aggregate_from_string(opt.aggregate));
    io::write_recommendations(out_path(opt, "recommendations.tsv"), recs);
    return 0;
}

int cmd_evaluate(const Options& opt) {
    auto records = io::load_acceptance(opt.acceptance);
    AcceptanceStats stats = acceptance_stats(records, opt.threshold);
    std::string block = io::format_acceptance_stats(stats);
    std::cout << block;
    if (opt.out_dir != ".") io::write_text(out_path(opt, "stats.txt"), block);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tag-based website recommendation for Turkish bookmarking data"};
    app.require_subcommand(1);
    Options opt;

    auto* pre = app.add_subcommand("preprocess",
                                   "Normalize raw <user, url, tag> rows into a clean dataset");
    pre->add_option("--triples", opt.triples, "Raw triples TSV (user<TAB>url<TAB>tag)")
        ->required();
    pre->add_option("--corpus", opt.corpus, "Turkish word list (word or word<TAB>freq)");
    pre->add_option("--suffixes", opt.suffixes, "Suffix table (one per line)");
    pre->add_flag("--no-spellcheck", opt.no_spellcheck, "Skip spell correction");
    pre->add_flag("--no-stem", opt.no_stem, "Skip stemming");
    add_common_flags(pre, opt);

    auto* exp = app.add_subcommand("expand", "Add synonym tags from a thesaurus");
    exp->add_option("--triples", opt.triples, "Clean or raw triples TSV")->required();
    exp->add_option("--thesaurus", opt.thesaurus, "Synonym TSV (word<TAB>syn1,syn2,...)")
        ->required();
    exp->add_option("--corpus", opt.corpus, "Corpus, needed when input is raw");
    exp->add_option("--suffixes", opt.suffixes, "Suffix table, used when input is raw");
    exp->add_flag("--no-spellcheck", opt.no_spellcheck, "Skip spell correction on raw input");
    exp->add_flag("--no-stem", opt.no_stem, "Skip stemming on raw input");
    add_common_flags(exp, opt);

    auto* rec = app.add_subcommand("recommend",
                                   "Expand, compute similarities and rank recommendations");
    rec->add_option("--triples", opt.triples, "Clean or raw triples TSV")->required();
    rec->add_option("--thesaurus", opt.thesaurus, "Synonym TSV");
    rec->add_option("--corpus", opt.corpus, "Corpus, needed when input is raw");
    rec->add_option("--suffixes", opt.suffixes, "Suffix table, used when input is raw");
    rec->add_option("--top-n", opt.top_n, "Recommendations per user")->check(CLI::PositiveNumber);
    rec->add_option("--aggregate", opt.aggregate, "Score aggregation: max, mean or sum")
        ->check(CLI::IsMember({"max", "mean", "sum"}));
    rec->add_flag("--no-spellcheck", opt.no_spellcheck, "Skip spell correction on raw input");
    rec->add_flag("--no-stem", opt.no_stem, "Skip stemming on raw input");
    rec->add_flag("--no-synonyms", opt.no_synonyms, "Skip synonym expansion");
    rec->add_flag("--dump-matrix", opt.dump_matrix, "Also write similarity.tsv");
    add_common_flags(rec, opt);

    auto* eval = app.add_subcommand("evaluate", "Acceptance statistics from an evaluation TSV");
    eval->add_option("--acceptance", opt.acceptance,
                     "TSV of user<TAB>accepted<TAB>presented")
        ->required();
    eval->add_option("--threshold", opt.threshold, "Success threshold on accepted count");
    add_common_flags(eval, opt);

    auto* pipe = app.add_subcommand("pipeline", "All stages: preprocess, expand, recommend");
    pipe->add_option("--triples", opt.triples, "Raw triples TSV")->required();
    pipe->add_option("--corpus", opt.corpus, "Turkish word list");
    pipe->add_option("--thesaurus", opt.thesaurus, "Synonym TSV");
    pipe->add_option("--suffixes", opt.suffixes, "Suffix table");
    pipe->add_option("--top-n", opt.top_n, "Recommendations per user")->check(CLI::PositiveNumber);
    pipe->add_option("--aggregate", opt.aggregate, "Score aggregation: max, mean or sum")
        ->check(CLI::IsMember({"max", "mean", "sum"}));
    pipe->add_flag("--no-spellcheck", opt.no_spellcheck, "Skip spell correction");
    pipe->add_flag("--no-stem", opt.no_stem, "Skip stemming");
    pipe->add_flag("--no-synonyms", opt.no_synonyms, "Skip synonym expansion");
    pipe->add_flag("--dump-matrix", opt.dump_matrix, "Also write similarity.tsv");
    add_common_flags(pipe, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (pre->parsed()) return cmd_preprocess(opt);
        if (exp->parsed()) return cmd_expand(opt);
        if (rec->parsed()) return run_recommend(opt, false);
        if (eval->parsed()) return cmd_evaluate(opt);
        if (pipe->parsed()) return run_recommend(opt, true);
    } catch (const std::exception& e) {
        std::cerr << "tagrec: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
