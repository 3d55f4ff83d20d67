#pragma once

#include <Eigen/Dense>

#include <vector>

#include "hookring/partition.hpp"

namespace hookring {

using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Exact integer-valued function on the conjugacy classes of S_n, stored
// densely over the all_partitions(n) class order.
struct ClassFunction {
    int n = 0;
    IntVector values; // indexed by class, all_partitions(n) order

    bool operator==(const ClassFunction& o) const { return n == o.n && values == o.values; }
};

// chi_lambda(rho) by the Murnaghan-Nakayama border-strip recursion, memoized.
Int mn_character(const Partition& lambda, const Partition& rho);

// Full exact character table of S_n. Rows are irreducibles, columns are
// cycle types, both in all_partitions(n) order.
class CharacterTable {
public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition>& labels() const { return labels_; }
    Int entry(int row, int col) const { return values_(row, col); }
    const IntMatrix& values() const { return values_; }
    Int centralizer(int col) const { return centralizers_[col]; }
    Int class_size(int col) const { return group_order_ / centralizers_[col]; }
    Int group_order() const { return group_order_; }

    int index_of(const Partition& p) const;
    ClassFunction row(int i) const;
    ClassFunction row(const Partition& lambda) const;

private:
    int n_;
    std::vector<Partition> labels_;
    IntMatrix values_;
    std::vector<Int> centralizers_;
    Int group_order_;
};

// Resource guard for table construction; overridable via HOOKRING_CEILING.
int table_ceiling();

// <f,g> = sum_rho f(rho) g(rho) / z_rho; errors if the sum is not integral.
Int inner_product(const CharacterTable& table, const ClassFunction& f, const ClassFunction& g);

} // namespace hookring
