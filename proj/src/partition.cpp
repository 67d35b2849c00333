#include "macqk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace macqk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition Partition::parse(const std::string& s) {
    std::string body = s;
    while (!body.empty() && body.front() == ' ') body.erase(body.begin());
    while (!body.empty() && body.back() == ' ') body.pop_back();
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("Partition::parse: expected [a,b,...]");
    body = body.substr(1, body.size() - 2);
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && body[pos] == ' ') ++pos;
        if (pos >= body.size()) break;
        std::size_t used = 0;
        parts.push_back(std::stoi(body.substr(pos), &used));
        pos += used;
        while (pos < body.size() && body[pos] == ' ') ++pos;
        if (pos < body.size()) {
            if (body[pos] != ',') throw std::invalid_argument("Partition::parse: expected ','");
            ++pos;
        }
    }
    return Partition(std::move(parts));
}

bool operator<(const Partition& a, const Partition& b) {
    const long wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    // lexicographically descending within a weight
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::vector<Cell> cells(const Partition& lambda) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(lambda.weight()));
    for (int j = 1; j <= lambda.length(); ++j)
        for (int i = 1; i <= lambda.part(j); ++i) out.push_back(Cell{i, j});
    return out;
}

std::optional<bool> dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight()) return std::nullopt;
    long pm = 0, pl = 0;
    const int n = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= n; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm > pl) return false;
    }
    return true;
}

long long z_lambda(const Partition& lambda) {
    long long z = 1;
    int run = 0, prev = 0;
    for (int p : lambda.parts()) {
        if (p == prev) ++run;
        else { prev = p; run = 1; }
        z *= static_cast<long long>(p) * run;  // accumulates p^{m_p} * m_p!
    }
    return z;
}

namespace {

void enumerate(int remaining, int max_part, int slots, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate(remaining - p, p, slots - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_length) {
    if (d < 0) throw std::invalid_argument("partitions_of: d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate(d, d, max_length < 0 ? d : max_length, acc, out);
    return out;
}

Partition add_rectangle(const Partition& mu, int parts_value, int n) {
    if (mu.length() > n) throw std::domain_error("add_rectangle: partition longer than n");
    if (parts_value < 0) throw std::domain_error("add_rectangle: parts_value must be >= 0");
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) parts[static_cast<std::size_t>(i - 1)] = mu.part(i) + parts_value;
    return Partition(std::move(parts));
}

}  // namespace macqk
