#ifndef TAGREC_RECOMMEND_HPP
#define TAGREC_RECOMMEND_HPP

#include <map>
#include <string>
#include <vector>

#include "tagrec/model.hpp"
#include "tagrec/similarity.hpp"

namespace tagrec {

// How a candidate's similarity to a user's several sites collapses into
// one score. Max is the default nearest-neighbor choice.
enum class Aggregate { Max, Mean, Sum };

std::string to_string(Aggregate a);
Aggregate aggregate_from_string(std::string_view s);

struct Recommendation {
    std::string user;
    std::string site;
    double score = 0.0;
    int rank = 0;
};

// Ranked candidate sites for one user: never a site the user already has,
// zero-score candidates dropped, sorted by score descending with ascending
// site as the tie-break. Throws for unknown users.
std::vector<Recommendation> recommend_for_user(const std::string& user,
                                               const Dataset& d,
                                               const SimilarityMatrix& m,
                                               int top_n,
                                               Aggregate aggregate = Aggregate::Max);

std::map<std::string, std::vector<Recommendation>> recommend_all(
    const Dataset& d, const SimilarityMatrix& m, int top_n,
    Aggregate aggregate = Aggregate::Max);

} // namespace tagrec

#endif
