#include "tagrec/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tagrec {

namespace {

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

void SimilarityMatrix::set(const std::string& a, const std::string& b, double score) {
    if (a == b) throw std::invalid_argument("self-pair not stored: " + a);
    scores_[ordered(a, b)] = score;
}

double SimilarityMatrix::at(const std::string& a, const std::string& b) const {
    if (a == b) return 1.0;
    auto it = scores_.find(ordered(a, b));
    return it == scores_.end() ? 0.0 : it->second;
}

double tag_popularity(const std::string& tag, const Dataset& d) {
    const auto& sites = d.sites_with_tag(tag);
    if (sites.empty()) throw std::out_of_range("tag not in dataset: " + tag);
    return static_cast<double>(sites.size()) / static_cast<double>(d.websites().size());
}

double tag_representativeness(const std::string& tag, const std::string& site,
                              const Dataset& d) {
    std::size_t total = d.tag_occurrences(tag);
    if (total == 0) throw std::out_of_range("tag not in dataset: " + tag);
    return static_cast<double>(d.site_tag_users(site, tag)) / static_cast<double>(total);
}

double cosine_tag_similarity(const std::string& a, const std::string& b,
                             const Dataset& d) {
    const auto& ta = d.tags_of(a);
    const auto& tb = d.tags_of(b);
    std::size_t shared = 0;
    for (const std::string& t : ta) shared += tb.count(t);
    return static_cast<double>(shared) /
           (std::sqrt(static_cast<double>(ta.size())) *
            std::sqrt(static_cast<double>(tb.size())));
}

RatingVector site_rating_vector(const std::string& site, const Dataset& d) {
    RatingVector rv;
    rv.site = site;
    for (const std::string& t : d.tags_of(site))
        rv.weights[t] = tag_popularity(t, d) * tag_representativeness(t, site, d);
    return rv;
}

double site_similarity(const std::string& a, const std::string& b, const Dataset& d) {
    RatingVector ra = site_rating_vector(a, d);
    RatingVector rb = site_rating_vector(b, d);

    double dot = 0.0;
    for (const auto& [tag, wa] : ra.weights) {
        auto it = rb.weights.find(tag);
        if (it != rb.weights.end()) dot += wa * it->second;
    }
    double na = 0.0, nb = 0.0;
    for (const auto& [tag, w] : ra.weights) na += w * w;
    for (const auto& [tag, w] : rb.weights) nb += w * w;
    if (na == 0.0 || nb == 0.0)
        throw std::domain_error("zero-norm rating vector for site pair");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

SimilarityMatrix build_similarity_matrix(const Dataset& d) {
    SimilarityMatrix m;
    const auto& sites = d.websites();
    for (auto ia = sites.begin(); ia != sites.end(); ++ia) {
        auto ib = ia;
        for (++ib; ib != sites.end(); ++ib) m.set(*ia, *ib, site_similarity(*ia, *ib, d));
    }
    return m;
}

} // namespace tagrec
