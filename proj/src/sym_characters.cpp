#include "hookring/sym_characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hookring {

namespace {

// Border strips are removed through the beta-set picture: lambda maps to the
// strictly decreasing set {lambda_i + (L-1-i)}, removing a strip of length l
// replaces some beta by beta-l, and the sign is read off the number of
// occupied slots skipped over.
Int mn_recurse(std::vector<int> lambda, std::vector<int> rho,
               std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
    if (rho.empty()) return 1; // lambda is empty too
    auto key = std::make_pair(lambda, rho);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int l = rho.front();
    std::vector<int> rho_rest(rho.begin() + 1, rho.end());

    int rows = static_cast<int>(lambda.size()) + l;
    int max_beta = (lambda.empty() ? 0 : lambda.front()) + rows;
    std::vector<char> occupied(static_cast<std::size_t>(max_beta) + 1, 0);
    std::vector<int> betas(rows);
    for (int i = 0; i < rows; ++i) {
        int part = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
        betas[i] = part + (rows - 1 - i);
        occupied[betas[i]] = 1;
    }

    Int total = 0;
    for (int i = 0; i < rows; ++i) {
        int b = betas[i];
        if (b - l < 0 || occupied[b - l]) continue;
        int skipped = 0;
        for (int j = b - l + 1; j < b; ++j)
            if (occupied[j]) ++skipped;
        // Rebuild the partition from the modified beta-set.
        std::vector<int> next = betas;
        next[i] = b - l;
        std::sort(next.begin(), next.end(), std::greater<int>());
        std::vector<int> mu;
        for (int j = 0; j < rows; ++j) {
            int part = next[j] - (rows - 1 - j);
            if (part > 0) mu.push_back(part);
        }
        Int sub = mn_recurse(std::move(mu), rho_rest, memo);
        total = (skipped % 2 == 0) ? ck_add(total, sub) : ck_sub(total, sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Int> g_mn_memo;
std::mutex g_mn_mutex;

} // namespace

Int mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("mn_character: |lambda| != |rho|");
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    return mn_recurse(lambda.parts(), rho.parts(), g_mn_memo);
}

int table_ceiling() {
    if (const char* env = std::getenv("HOOKRING_CEILING")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

CharacterTable::CharacterTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CharacterTable: n must be positive");
    if (n > table_ceiling())
        throw std::runtime_error("CharacterTable: n exceeds ceiling (set HOOKRING_CEILING to raise)");
    labels_ = all_partitions(n);
    int m = static_cast<int>(labels_.size());
    values_.resize(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) values_(r, c) = mn_character(labels_[r], labels_[c]);
    centralizers_.reserve(m);
    for (const auto& rho : labels_) centralizers_.push_back(centralizer_order(rho));
    group_order_ = factorial(n);
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::find(labels_.begin(), labels_.end(), p);
    if (it == labels_.end()) throw std::invalid_argument("partition is not a label of this table");
    return static_cast<int>(it - labels_.begin());
}

ClassFunction CharacterTable::row(int i) const {
    ClassFunction f;
    f.n = n_;
    f.values = values_.row(i).transpose();
    return f;
}

ClassFunction CharacterTable::row(const Partition& lambda) const { return row(index_of(lambda)); }

Int inner_product(const CharacterTable& table, const ClassFunction& f, const ClassFunction& g) {
    if (f.n != table.n() || g.n != table.n())
        throw std::invalid_argument("inner_product: size mismatch");
    // sum f g / z = (1/n!) sum f g (n!/z); keep everything in 128 bits.
    __int128 acc = 0;
    for (int c = 0; c < f.values.size(); ++c) {
        __int128 term = static_cast<__int128>(f.values[c]) * g.values[c];
        acc += term * table.class_size(c);
    }
    __int128 order = table.group_order();
    if (acc % order != 0)
        throw std::runtime_error("inner_product: non-integral value (corrupted class function)");
    __int128 q = acc / order;
    Int result = static_cast<Int>(q);
    if (static_cast<__int128>(result) != q) throw OverflowError("inner_product overflow");
    return result;
}

} // namespace hookring
