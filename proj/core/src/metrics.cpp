#include "tagrec/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace tagrec {

AcceptanceStats acceptance_stats(std::span<const AcceptanceRecord> records,
                                 double threshold) {
    if (records.size() < 2)
        throw std::invalid_argument("need at least 2 acceptance records");

    long sum_accepted = 0, sum_presented = 0;
    std::size_t succeeded = 0;
    for (const AcceptanceRecord& r : records) {
        if (r.presented < 1) throw std::invalid_argument("presented must be >= 1");
        if (r.accepted < 0 || r.accepted > r.presented)
            throw std::invalid_argument("accepted out of range for user " + r.user);
        sum_accepted += r.accepted;
        sum_presented += r.presented;
        if (static_cast<double>(r.accepted) >= threshold) ++succeeded;
    }

    const double n = static_cast<double>(records.size());
    const double mean = static_cast<double>(sum_accepted) / n;
    double ss = 0.0;
    for (const AcceptanceRecord& r : records) {
        double delta = static_cast<double>(r.accepted) - mean;
        ss += delta * delta;
    }
    const double stddev = std::sqrt(ss / (n - 1.0));

    AcceptanceStats stats;
    stats.mean_accepted = mean;
    stats.sem = stddev / std::sqrt(n);
    stats.percent_accepted =
        100.0 * static_cast<double>(sum_accepted) / static_cast<double>(sum_presented);
    stats.percent_succeeded = 100.0 * static_cast<double>(succeeded) / n;
    stats.threshold = threshold;
    stats.user_count = records.size();
    return stats;
}

} // namespace tagrec
