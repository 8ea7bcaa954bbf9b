#ifndef TAGREC_METRICS_HPP
#define TAGREC_METRICS_HPP

#include <span>
#include <string>

namespace tagrec {

struct AcceptanceRecord {
    std::string user;
    int accepted = 0;
    int presented = 0;
};

struct AcceptanceStats {
    double mean_accepted = 0.0;
    double sem = 0.0;              // sample (n-1) standard deviation / sqrt(n)
    double percent_accepted = 0.0; // 100 * sum(accepted) / sum(presented)
    double percent_succeeded = 0.0; // share of users with accepted >= threshold
    double threshold = 0.0;
    std::size_t user_count = 0;
};

// Aggregate acceptance arithmetic over per-user counts. Needs at least
// two records (the SEM is undefined otherwise).
AcceptanceStats acceptance_stats(std::span<const AcceptanceRecord> records,
                                 double threshold);

} // namespace tagrec

#endif
