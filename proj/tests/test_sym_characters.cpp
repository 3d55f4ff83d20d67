#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "hookring/rep_ring.hpp"
#include "hookring/sym_characters.hpp"

using namespace hookring;

namespace {

// Independent character oracle: Young-subgroup permutation characters counted
// directly on permutations (cycles distributed over rows), orthogonalized
// top-down. No border strips anywhere.
struct BruteForceTable {
    int n;
    std::vector<Partition> labels;
    IntMatrix values; // rows irreducibles, cols classes (all_partitions order)

    explicit BruteForceTable(int n_) : n(n_) {
        labels = all_partitions(n);
        int m = static_cast<int>(labels.size());

        // All permutations, bucketed by cycle type.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<std::vector<int>>> class_reps(m); // cycle lengths per permutation
        std::vector<Int> class_count(m, 0);
        do {
            std::vector<int> cycles = cycle_lengths(perm);
            Partition type = to_partition(cycles);
            int idx = index_of(type);
            class_reps[idx].push_back(cycles);
            ++class_count[idx];
        } while (std::next_permutation(perm.begin(), perm.end()));

        // Permutation-module characters phi_lambda per class.
        IntMatrix phi(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                phi(r, c) = fixed_tabloids(labels[r].parts(), class_reps[c].front());

        // Orthogonalize in reverse-lex order; earlier labels dominate later
        // ones whenever the Kostka matrix contributes.
        values.resize(m, m);
        for (int r = 0; r < m; ++r) {
            IntVector row = phi.row(r).transpose();
            for (int prev = 0; prev < r; ++prev) {
                Int mult = pair(row, values.row(prev).transpose(), class_count);
                row -= mult * values.row(prev).transpose();
            }
            values.row(r) = row.transpose();
        }
    }

    int index_of(const Partition& p) const {
        return static_cast<int>(std::find(labels.begin(), labels.end(), p) - labels.begin());
    }

    static std::vector<int> cycle_lengths(const std::vector<int>& perm) {
        std::vector<int> lens;
        std::vector<char> seen(perm.size(), 0);
        for (std::size_t start = 0; start < perm.size(); ++start) {
            if (seen[start]) continue;
            int len = 0;
            for (std::size_t i = start; !seen[i]; i = perm[i]) {
                seen[i] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        return lens;
    }

    static Partition to_partition(std::vector<int> lens) {
        std::sort(lens.begin(), lens.end(), std::greater<int>());
        return Partition(lens);
    }

    // Number of ways to distribute the cycles over rows with prescribed row
    // sums: fixed points of the permutation on tabloids of shape lambda.
    static Int fixed_tabloids(const std::vector<int>& rows, const std::vector<int>& cycles) {
        std::vector<int> fill(rows.size(), 0);
        return place(rows, cycles, 0, fill);
    }

    static Int place(const std::vector<int>& rows, const std::vector<int>& cycles, std::size_t i,
                     std::vector<int>& fill) {
        if (i == cycles.size()) return 1;
        Int total = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (fill[r] + cycles[i] > rows[r]) continue;
            fill[r] += cycles[i];
            total += place(rows, cycles, i + 1, fill);
            fill[r] -= cycles[i];
        }
        return total;
    }

    Int pair(const IntVector& f, const IntVector& g, const std::vector<Int>& class_count) const {
        Int order = factorial(n);
        Int acc = 0;
        for (int c = 0; c < f.size(); ++c) acc += f[c] * g[c] * class_count[c];
        REQUIRE(acc % order == 0);
        return acc / order;
    }
};

Partition to_identity(int n) { return Partition(std::vector<int>(n, 1)); }

} // namespace

TEST_CASE("mn_character basic values") {
    for (const auto& rho : all_partitions(3)) CHECK(mn_character(Partition{3}, rho) == 1);
    CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS_AS(mn_character(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("character table matches brute-force oracle up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        BruteForceTable oracle(n);
        CharacterTable table(n);
        REQUIRE(oracle.labels == table.labels());
        for (int r = 0; r < static_cast<int>(table.labels().size()); ++r)
            for (int c = 0; c < static_cast<int>(table.labels().size()); ++c)
                CHECK(table.entry(r, c) == oracle.values(r, c));
    }
}

TEST_CASE("small tables are exactly the classical ones") {
    CharacterTable t1(1);
    CHECK(t1.entry(0, 0) == 1);
    CharacterTable t2(2);
    int id2 = t2.index_of(Partition{1, 1});
    int swap2 = t2.index_of(Partition{2});
    CHECK(t2.entry(0, id2) == 1);
    CHECK(t2.entry(0, swap2) == 1);
    CHECK(t2.entry(1, id2) == 1);
    CHECK(t2.entry(1, swap2) == -1);
    CharacterTable t3(3);
    int row = t3.index_of(Partition{2, 1});
    CHECK(t3.entry(row, t3.index_of(Partition{1, 1, 1})) == 2);
    CHECK(t3.entry(row, t3.index_of(Partition{2, 1})) == 0);
    CHECK(t3.entry(row, t3.index_of(Partition{3})) == -1);
}

TEST_CASE("row and column orthogonality hold exactly up to n = 10") {
    for (int n = 1; n <= 10; ++n) {
        CharacterTable t(n);
        int m = static_cast<int>(t.labels().size());
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                CHECK(inner_product(t, t.row(a), t.row(b)) == (a == b ? 1 : 0));
            }
        // column orthogonality: sum_lambda chi(rho) chi(sigma) = delta * z_rho
        for (int c1 = 0; c1 < m; ++c1)
            for (int c2 = c1; c2 < m; ++c2) {
                __int128 acc = 0;
                for (int r = 0; r < m; ++r)
                    acc += static_cast<__int128>(t.entry(r, c1)) * t.entry(r, c2);
                CHECK(acc == (c1 == c2 ? static_cast<__int128>(t.centralizer(c1)) : 0));
            }
    }
}

TEST_CASE("identity column holds hook-length dimensions up to n = 10") {
    for (int n = 1; n <= 10; ++n) {
        CharacterTable t(n);
        int id = t.index_of(to_identity(n));
        for (const auto& lambda : t.labels())
            CHECK(t.entry(t.index_of(lambda), id) == dimension(lambda));
    }
}

TEST_CASE("conjugation twists by the sign character") {
    for (int n = 2; n <= 8; ++n) {
        CharacterTable t(n);
        for (const auto& lambda : t.labels())
            for (const auto& rho : t.labels()) {
                int sign = ((n - rho.length()) % 2 == 0) ? 1 : -1;
                CHECK(mn_character(conjugate(lambda), rho) == sign * mn_character(lambda, rho));
            }
    }
}

TEST_CASE("inner products with the regular character give dimensions") {
    CharacterTable t(4);
    ClassFunction reg;
    reg.n = 4;
    reg.values = IntVector::Zero(t.labels().size());
    reg.values[t.index_of(to_identity(4))] = factorial(4);
    for (const auto& lambda : t.labels())
        CHECK(inner_product(t, reg, t.row(lambda)) == dimension(lambda));
}

TEST_CASE("inner_product rejects a corrupted class function") {
    CharacterTable t(3);
    ClassFunction f;
    f.n = 3;
    f.values = IntVector::Zero(3);
    f.values[0] = 1; // not constant on enough classes to be a virtual character
    ClassFunction g = t.row(Partition{2, 1});
    CHECK_THROWS_AS(inner_product(t, f, g), std::runtime_error);
}
