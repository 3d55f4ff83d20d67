#include "hookring/reflection_groups.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "hookring/rep_ring.hpp"

namespace hookring {

std::string BnLabel::to_string() const {
    return "(" + lambda.to_string() + "," + mu.to_string() + ")";
}

std::string SignedCycleType::to_string() const {
    return "(" + positive.to_string() + ";" + negative.to_string() + ")";
}

std::vector<BnLabel> bn_labels(int n) {
    std::vector<BnLabel> out;
    for (int a = n; a >= 0; --a)
        for (const auto& lambda : all_partitions(a))
            for (const auto& mu : all_partitions(n - a)) out.push_back({lambda, mu});
    return out;
}

std::vector<SignedCycleType> bn_classes(int n) {
    std::vector<SignedCycleType> out;
    for (int a = n; a >= 0; --a)
        for (const auto& alpha : all_partitions(a))
            for (const auto& beta : all_partitions(n - a)) out.push_back({alpha, beta});
    return out;
}

Int bn_centralizer_order(const SignedCycleType& c) {
    Int z = ck_mul(centralizer_order(c.positive), centralizer_order(c.negative));
    for (int i = 0; i < c.positive.length() + c.negative.length(); ++i) z = ck_mul(z, 2);
    return z;
}

namespace {

Partition merge_sorted(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return static_cast<Int>(r);
}

// Distinct (part value, sign) groups of a signed cycle type with multiplicities.
struct PartGroup {
    int value;
    bool negative;
    int mult;
};

std::vector<PartGroup> part_groups(const SignedCycleType& c) {
    std::vector<PartGroup> out;
    auto scan = [&](const Partition& p, bool neg) {
        int i = 0;
        while (i < p.length()) {
            int j = i;
            while (j < p.length() && p.parts()[j] == p.parts()[i]) ++j;
            out.push_back({p.parts()[i], neg, j - i});
            i = j;
        }
    };
    scan(c.positive, false);
    scan(c.negative, true);
    return out;
}

// Sum over multiset splittings of the class between B_k and B_{n-k}; the
// centralizer ratio collapses to a product of binomials per part group.
void splittings(const std::vector<PartGroup>& groups, std::size_t idx, int need,
                std::vector<int>& take, Int factor,
                const std::function<void(const std::vector<int>&, Int)>& emit) {
    if (need < 0) return;
    if (idx == groups.size()) {
        if (need == 0) emit(take, factor);
        return;
    }
    const auto& g = groups[idx];
    for (int c = 0; c <= g.mult && c * g.value <= need; ++c) {
        take.push_back(c);
        splittings(groups, idx + 1, need - c * g.value, take, ck_mul(factor, binomial(g.mult, c)),
                   emit);
        take.pop_back();
    }
}

} // namespace

Int bn_character(const BnLabel& label, const SignedCycleType& cls) {
    int n = label.lambda.size() + label.mu.size();
    if (cls.positive.size() + cls.negative.size() != n)
        throw std::invalid_argument("bn_character: size mismatch");
    int k = label.lambda.size();
    auto groups = part_groups(cls);
    Int total = 0;
    std::vector<int> take;
    splittings(groups, 0, k, take, 1, [&](const std::vector<int>& taken, Int factor) {
        // Assemble the two halves of the splitting.
        std::vector<int> a1, b1, a2, b2;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            auto& first = groups[g].negative ? b1 : a1;
            auto& second = groups[g].negative ? b2 : a2;
            first.insert(first.end(), taken[g], groups[g].value);
            second.insert(second.end(), groups[g].mult - taken[g], groups[g].value);
        }
        auto sort_desc = [](std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<int>()); };
        sort_desc(a1); sort_desc(b1); sort_desc(a2); sort_desc(b2);
        Partition alpha1(a1), beta1(b1), alpha2(a2), beta2(b2);
        // First factor: pullback of chi_lambda through B_k ->> S_k.
        Int v1 = mn_character(label.lambda, merge_sorted(alpha1, beta1));
        // Second factor: base-sign character times the pullback of chi_mu.
        Int v2 = mn_character(label.mu, merge_sorted(alpha2, beta2));
        if (beta2.length() % 2 == 1) v2 = -v2;
        total = ck_add(total, ck_mul(factor, ck_mul(v1, v2)));
    });
    return total;
}

BnCharacterTable::BnCharacterTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("BnCharacterTable: n must be positive");
    if (n > table_ceiling())
        throw std::runtime_error("BnCharacterTable: n exceeds ceiling (set HOOKRING_CEILING)");
    labels_ = bn_labels(n);
    classes_ = bn_classes(n);
    int rows = static_cast<int>(labels_.size());
    int cols = static_cast<int>(classes_.size());
    values_.resize(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) values_(r, c) = bn_character(labels_[r], classes_[c]);
    centralizers_.reserve(cols);
    for (const auto& c : classes_) centralizers_.push_back(bn_centralizer_order(c));
    group_order_ = factorial(n);
    for (int i = 0; i < n; ++i) group_order_ = ck_mul(group_order_, 2);
}

int BnCharacterTable::index_of(const BnLabel& l) const {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw std::invalid_argument("BnCharacterTable: unknown label");
    return static_cast<int>(it - labels_.begin());
}

Int BnCharacterTable::decompose_coefficient(const IntVector& f, int row) const {
    __int128 acc = 0;
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c) {
        __int128 term = static_cast<__int128>(f[c]) * values_(row, c);
        acc += term * (group_order_ / centralizers_[c]);
    }
    if (acc % group_order_ != 0)
        throw std::runtime_error("BnCharacterTable: non-integral inner product");
    return static_cast<Int>(acc / group_order_);
}

IntVector BnCharacterTable::decompose(const IntVector& f) const {
    IntVector out(static_cast<int>(labels_.size()));
    for (int r = 0; r < out.size(); ++r) out[r] = decompose_coefficient(f, r);
    return out;
}

namespace {

// Multiply polynomials with checked coefficients.
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = ck_add(out[i + j], ck_mul(a[i], b[j]));
    return out;
}

// 1 - (-t)^l  (positive l-cycle) or 1 + (-t)^l (negative l-cycle): the
// characteristic coefficients of the eigenvalue sets x^l = 1 and x^l = -1.
std::vector<Int> cycle_factor(int l, bool negative) {
    std::vector<Int> f(l + 1, 0);
    f[0] = 1;
    Int top = (l % 2 == 0) ? -1 : 1; // -(-1)^l
    f[l] = negative ? -top : top;
    return f;
}

} // namespace

std::vector<Int> exterior_power_characters(BnReflectionRep rep, const SignedCycleType& cls, int n) {
    if (cls.positive.size() + cls.negative.size() != n)
        throw std::invalid_argument("exterior_power_characters: size mismatch");
    std::vector<Int> poly{1};
    if (rep == BnReflectionRep::V) {
        for (int l : cls.positive.parts()) poly = poly_mul(poly, cycle_factor(l, false));
        for (int l : cls.negative.parts()) poly = poly_mul(poly, cycle_factor(l, true));
    } else {
        // U factors through the underlying permutation; remove the fixed
        // eigenvalue 1 by exact division by (1+t).
        Partition gamma = merge_sorted(cls.positive, cls.negative);
        for (int l : gamma.parts()) poly = poly_mul(poly, cycle_factor(l, false));
        std::vector<Int> q(poly.size() - 1, 0);
        Int carry = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = ck_sub(poly[i], carry);
            carry = q[i];
        }
        if (poly.back() != carry)
            throw std::runtime_error("exterior_power_characters: (1+t) does not divide");
        poly = std::move(q);
    }
    return poly;
}

RingData bn_ring_data(const BnCharacterTable& table) {
    RingData data;
    for (const auto& l : table.labels()) data.label_names.push_back(l.to_string());
    std::vector<int> size_n_parts{table.n()};
    data.unit = table.index_of({Partition(size_n_parts), Partition()});
    auto cache = std::make_shared<std::map<std::pair<int, int>, IntVector>>();
    data.multiply_basis = [&table, cache](int i, int j) {
        auto key = std::minmax(i, j);
        if (auto it = cache->find(key); it != cache->end()) return it->second;
        int cols = static_cast<int>(table.classes().size());
        IntVector prod(cols);
        for (int c = 0; c < cols; ++c) prod[c] = ck_mul(table.entry(key.first, c), table.entry(key.second, c));
        IntVector result = table.decompose(prod);
        cache->emplace(key, result);
        return result;
    };
    return data;
}

IntVector bn_exterior_power_vector(const BnCharacterTable& table, BnReflectionRep rep, int k) {
    int cols = static_cast<int>(table.classes().size());
    IntVector f(cols);
    for (int c = 0; c < cols; ++c) {
        auto coeffs = exterior_power_characters(rep, table.classes()[c], table.n());
        f[c] = k < static_cast<int>(coeffs.size()) ? coeffs[k] : 0;
    }
    return table.decompose(f);
}

BnExperimentReport bn_experiments(int n) {
    BnCharacterTable table(n);
    RingData data = bn_ring_data(table);
    std::vector<IntVector> hooks, both;
    for (int k = 0; k <= n; ++k) {
        IntVector v = bn_exterior_power_vector(table, BnReflectionRep::V, k);
        hooks.push_back(v);
        both.push_back(v);
    }
    for (int k = 0; k <= n - 1; ++k)
        both.push_back(bn_exterior_power_vector(table, BnReflectionRep::U, k));
    auto run = [&](const std::vector<IntVector>& gens) {
        SaturationResult sat = saturate(data, gens);
        GenerationReport r;
        r.full = is_full(sat.lattice);
        r.rank = sat.lattice.rank();
        r.index = lattice_index(sat.lattice);
        r.iterations = sat.iterations;
        return r;
    };
    BnExperimentReport report;
    report.n = n;
    report.hooks_only = run(hooks);
    report.hooks_and_u = run(both);
    return report;
}

} // namespace hookring
