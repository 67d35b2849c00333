#ifndef MACQK_PARTITION_HPP
#define MACQK_PARTITION_HPP

/// @file partition.hpp
/// @brief Integer partitions: shapes, conjugation, dominance, cells, z_lambda.

#include <optional>
#include <string>
#include <vector>

namespace macqk {

/// Weakly decreasing positive parts; zero parts are never stored.
class Partition {
public:
    Partition() = default;
    /// Accepts weakly decreasing parts with trailing zeros allowed (stripped);
    /// throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    bool is_empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    /// 1-based part access; 0 beyond the length.
    int part(int i) const;

    Partition conjugate() const;
    /// Componentwise containment mu_i <= this_i.
    bool contains(const Partition& mu) const;

    /// "[4,2,2]"; the empty partition is "[]".
    std::string to_string() const;
    static Partition parse(const std::string& s);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Canonical order: weight ascending, then lexicographically descending —
    /// within one weight this is the enumeration order of partitions_of.
    friend bool operator<(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
};

/// column i, row j; (i,j) lies in lambda iff j <= length and i <= lambda_j.
struct Cell {
    int column = 0;
    int row = 0;
};

/// Row-major cell list: j = 1..length(lambda), i = 1..lambda_j.
std::vector<Cell> cells(const Partition& lambda);

/// Dominance: all prefix sums of mu <= those of lambda. Empty optional when
/// the weights differ (incomparable).
std::optional<bool> dominance_leq(const Partition& mu, const Partition& lambda);

/// prod_i i^{m_i} m_i! over the part multiplicities.
long long z_lambda(const Partition& lambda);

/// All partitions of d (length <= max_length when given), reverse-lex order.
std::vector<Partition> partitions_of(int d, int max_length = -1);

/// Pads mu to length n with zeros and adds parts_value to every part; throws
/// std::domain_error when length(mu) > n.
Partition add_rectangle(const Partition& mu, int parts_value, int n);

}  // namespace macqk

#endif
