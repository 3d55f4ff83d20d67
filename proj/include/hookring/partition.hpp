#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hookring/checked.hpp"

namespace hookring {

// Weakly decreasing sequence of positive parts. The empty partition is the
// unique partition of 0. Doubles as an irreducible label and as a cycle type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Parses "[3,2,1,1]" or "3,2,1,1"; rejects out-of-order parts.
Partition parse_partition(const std::string& text);

// All partitions of n in reverse-lexicographic order, [n] first.
std::vector<Partition> all_partitions(int n);

// First row deleted.
Partition theta(const Partition& lambda);

// Every part reduced by one, zero parts dropped.
Partition interior(const Partition& alpha);

// Number of nonzero parts, |alpha| - |interior(alpha)|.
int boundary_size(const Partition& alpha);

// Number of indices with lambda_i != lambda_{i+1} (number of distinct part values).
int delta(const Partition& lambda);

// [n-k, 1^k]; requires 0 <= k <= n-1.
Partition hook_partition(int n, int k);

// n - lambda_1.
int level(const Partition& lambda);

// z_rho = prod_i i^{m_i} m_i! for a cycle type rho.
Int centralizer_order(const Partition& rho);

Partition conjugate(const Partition& lambda);

Int factorial(int n);

} // namespace hookring
