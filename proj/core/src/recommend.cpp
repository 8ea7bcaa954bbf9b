#include "tagrec/recommend.hpp"

#include <algorithm>
#include <stdexcept>

namespace tagrec {

std::string to_string(Aggregate a) {
    switch (a) {
        case Aggregate::Max: return "max";
        case Aggregate::Mean: return "mean";
        case Aggregate::Sum: return "sum";
    }
    throw std::logic_error("unknown aggregate");
}

Aggregate aggregate_from_string(std::string_view s) {
    if (s == "max") return Aggregate::Max;
    if (s == "mean") return Aggregate::Mean;
    if (s == "sum") return Aggregate::Sum;
    throw std::invalid_argument("unknown aggregate: " + std::string(s));
}

std::vector<Recommendation> recommend_for_user(const std::string& user,
                                               const Dataset& d,
                                               const SimilarityMatrix& m,
                                               int top_n,
                                               Aggregate aggregate) {
    if (top_n < 1) throw std::invalid_argument("top_n must be >= 1");
    const std::set<std::string>& owned = d.sites_of(user); // throws if unknown

    std::vector<Recommendation> out;
    for (const std::string& candidate : d.websites()) {
        if (owned.count(candidate)) continue;
        double score = 0.0;
        for (const std::string& site : owned) {
            double s = m.at(candidate, site);
            switch (aggregate) {
                case Aggregate::Max: score = std::max(score, s); break;
                case Aggregate::Mean:
                case Aggregate::Sum: score += s; break;
            }
        }
        if (aggregate == Aggregate::Mean)
            score /= static_cast<double>(owned.size());
        if (score == 0.0) continue;
        out.push_back({user, candidate, score, 0});
    }

    std::sort(out.begin(), out.end(), [](const Recommendation& a, const Recommendation& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.site < b.site;
    });
    if (out.size() > static_cast<std::size_t>(top_n)) out.resize(static_cast<std::size_t>(top_n));
    for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i) + 1;
    return out;
}

std::map<std::string, std::vector<Recommendation>> recommend_all(
    const Dataset& d, const SimilarityMatrix& m, int top_n, Aggregate aggregate) {
    std::map<std::string, std::vector<Recommendation>> out;
    for (const std::string& user : d.users())
        out[user] = recommend_for_user(user, d, m, top_n, aggregate);
    return out;
}

} // namespace tagrec
