#ifndef MACQK_REPORT_HPP
#define MACQK_REPORT_HPP

/// @file report.hpp
/// @brief Identity-check reports, JSON emission, and the sweep worker pool.

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace macqk {

/// Outcome of one identity instance. `params` keeps insertion order so that
/// serialized reports are deterministic.
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    double elapsed_ms = 0.0;

    void add_param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }

    /// {"identity":..,"params":{..},"pass":..,"lhs":..,"rhs":..,"elapsed_ms":..};
    /// stable_timing forces elapsed_ms to 0 for byte-identical reruns.
    std::string to_json_string(bool stable_timing = false) const;
    /// "PASS identity key=value ..." one-liner.
    std::string to_plain_string(bool stable_timing = false) const;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Runs jobs on `njobs` workers (njobs <= 1 runs inline); results are returned
/// in job-index order regardless of completion order.
std::vector<VerificationReport> run_parallel(const std::vector<std::function<VerificationReport()>>& jobs,
                                             int njobs);

}  // namespace macqk

#endif
