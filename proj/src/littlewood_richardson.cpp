#include "hookring/littlewood_richardson.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookring {

namespace {

struct Search {
    const Partition& lambda;
    const Partition& mu;
    const std::optional<Partition>& nu;
    int max_rows;
    std::vector<int> shape;               // current row lengths
    std::vector<std::vector<int>> labels; // labels[i][j] for boxes beyond lambda, 0 = base box
    std::vector<Expansion> out;

    Search(const Partition& l, const Partition& m, const std::optional<Partition>& n)
        : lambda(l), mu(m), nu(n) {
        max_rows = l.length() + std::max(m.length(), 1);
        if (nu) max_rows = std::max(max_rows, nu->length());
        shape.assign(max_rows, 0);
        labels.assign(max_rows, {});
        for (int i = 0; i < l.length(); ++i) shape[i] = l.parts()[i];
    }

    // Reverse reading word of the added boxes must stay a lattice word; a
    // violation in a partial filling survives into every completion.
    bool lattice_ok() const {
        std::vector<int> counts(mu.length() + 2, 0);
        for (int i = 0; i < max_rows; ++i) {
            const auto& row = labels[i];
            for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
                int p = row[j];
                if (p == 0) continue;
                ++counts[p];
                if (p > 1 && counts[p] > counts[p - 1]) return false;
            }
        }
        return true;
    }

    void record() {
        Expansion e;
        e.base = lambda;
        std::vector<int> parts;
        for (int i = 0; i < max_rows; ++i)
            if (shape[i] > 0) parts.push_back(shape[i]);
        e.shape = Partition(parts);
        for (int i = 0; i < max_rows; ++i) {
            int base = i < lambda.length() ? lambda.parts()[i] : 0;
            for (int j = 0; j < static_cast<int>(labels[i].size()); ++j)
                if (labels[i][j] != 0) e.boxes.push_back({i, base + j, labels[i][j]});
        }
        out.push_back(std::move(e));
    }

    // Place the remaining boxes of label step `step` on rows >= row, given the
    // shape `prev` at the start of the step. Horizontal-strip condition:
    // the new length of row i may not exceed prev[i-1].
    void place(int step, int row, int remaining, const std::vector<int>& prev) {
        if (remaining == 0) {
            if (!lattice_ok()) return;
            next_step(step + 1);
            return;
        }
        if (row >= max_rows) return;
        int cap_len = (row == 0) ? shape[row] + remaining : prev[row - 1];
        if (nu) cap_len = std::min(cap_len, nu->part(row));
        int most = std::min(cap_len - shape[row], remaining);
        for (int add = most; add >= 0; --add) {
            if (add > 0) {
                shape[row] += add;
                labels[row].insert(labels[row].end(), add, step);
            }
            place(step, row + 1, remaining - add, prev);
            if (add > 0) {
                shape[row] -= add;
                labels[row].resize(labels[row].size() - add);
            }
        }
    }

    void next_step(int step) {
        if (step > mu.length()) {
            if (nu) {
                for (int i = 0; i < max_rows; ++i)
                    if (shape[i] != nu->part(i)) return;
            }
            record();
            return;
        }
        std::vector<int> prev = shape; // freeze the pre-step shape
        place(step, 0, mu.parts()[step - 1], prev);
    }
};

} // namespace

std::vector<Expansion> enumerate_expansions(const Partition& lambda, const Partition& mu,
                                            const std::optional<Partition>& nu) {
    if (nu) {
        if (nu->size() != lambda.size() + mu.size())
            throw std::invalid_argument("enumerate_expansions: |nu| != |lambda| + |mu|");
        for (int i = 0; i < lambda.length(); ++i)
            if (nu->part(i) < lambda.parts()[i])
                throw std::invalid_argument("enumerate_expansions: nu does not contain lambda");
    }
    Search s(lambda, mu, nu);
    s.next_step(1);
    return s.out;
}

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    for (int i = 0; i < lambda.length(); ++i)
        if (nu.part(i) < lambda.parts()[i]) return 0;
    return static_cast<Int>(enumerate_expansions(lambda, mu, nu).size());
}

} // namespace hookring
