#include "macqk/report.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace macqk {

std::string VerificationReport::to_json_string(bool stable_timing) const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) p[key] = value;
    j["params"] = p;
    j["pass"] = pass;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["elapsed_ms"] = stable_timing ? 0.0 : elapsed_ms;
    return j.dump();
}

std::string VerificationReport::to_plain_string(bool stable_timing) const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << ' ' << identity;
    for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
    if (!stable_timing) {
        out.precision(1);
        out << " (" << std::fixed << elapsed_ms << " ms)";
    }
    return out.str();
}

std::vector<VerificationReport> run_parallel(const std::vector<std::function<VerificationReport()>>& jobs,
                                             int njobs) {
    std::vector<VerificationReport> results(jobs.size());
    if (njobs <= 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            results[i] = jobs[i]();
        }
    };
    size_t nthreads = std::min<size_t>(static_cast<size_t>(njobs), jobs.size());
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace macqk
