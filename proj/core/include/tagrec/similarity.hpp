#ifndef TAGREC_SIMILARITY_HPP
#define TAGREC_SIMILARITY_HPP

#include <map>
#include <string>
#include <utility>

#include "tagrec/model.hpp"

namespace tagrec {

// Per-tag weights for one website; positive exactly on the site's tags.
struct RatingVector {
    std::string site;
    std::map<std::string, double> weights;
};

// Symmetric website-by-website scores in [0,1]. Pairs are stored
// unordered (lexicographically smaller site first). Self-similarity is 1
// by definition and never stored.
class SimilarityMatrix {
public:
    void set(const std::string& a, const std::string& b, double score);
    double at(const std::string& a, const std::string& b) const;
    std::size_t pair_count() const { return scores_.size(); }
    const std::map<std::pair<std::string, std::string>, double>& scores() const {
        return scores_;
    }

private:
    std::map<std::pair<std::string, std::string>, double> scores_;
};

// Fraction of all websites carrying the tag. Throws for tags absent
// from the dataset.
double tag_popularity(const std::string& tag, const Dataset& d);

// Fraction of the tag's triple occurrences that attach to this site.
double tag_representativeness(const std::string& tag, const std::string& site,
                              const Dataset& d);

// Binary tag-incidence cosine: |Ta n Tb| / (sqrt|Ta| * sqrt|Tb|).
double cosine_tag_similarity(const std::string& a, const std::string& b,
                             const Dataset& d);

// weight[t] = popularity(t) * representativeness(t, site) per site tag.
RatingVector site_rating_vector(const std::string& site, const Dataset& d);

// Cosine of the two rating vectors; only shared tags contribute.
double site_similarity(const std::string& a, const std::string& b, const Dataset& d);

// All unordered pairs of distinct websites.
SimilarityMatrix build_similarity_matrix(const Dataset& d);

} // namespace tagrec

#endif
