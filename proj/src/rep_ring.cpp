#include "hookring/rep_ring.hpp"

#include "hookring/littlewood_richardson.hpp"

#include <sstream>
#include <stdexcept>

namespace hookring {

std::string VirtualCharacter::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [label, c] : coeffs) {
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        Int a = c < 0 ? -c : c;
        if (a != 1) out << a << "*";
        out << label.to_string();
    }
    return out.str();
}

SymRing::SymRing(int n) : n_(n), table_(n) {}

VirtualCharacter SymRing::irreducible(const Partition& lambda) const {
    if (lambda.size() != n_) throw std::invalid_argument("irreducible: |lambda| != n");
    VirtualCharacter v;
    v.n = n_;
    v.add(lambda, 1);
    return v;
}

ClassFunction SymRing::character_of(const VirtualCharacter& a) const {
    if (a.n != n_) throw std::invalid_argument("character_of: n mismatch");
    ClassFunction f;
    f.n = n_;
    f.values = IntVector::Zero(table_.labels().size());
    for (const auto& [label, c] : a.coeffs) {
        int row = table_.index_of(label);
        for (int col = 0; col < f.values.size(); ++col)
            f.values[col] = ck_add(f.values[col], ck_mul(c, table_.entry(row, col)));
    }
    return f;
}

VirtualCharacter SymRing::decompose(const ClassFunction& f) const {
    if (f.n != n_) throw std::invalid_argument("decompose: n mismatch");
    VirtualCharacter v;
    v.n = n_;
    for (std::size_t i = 0; i < table_.labels().size(); ++i)
        v.add(table_.labels()[i], inner_product(table_, f, table_.row(static_cast<int>(i))));
    return v;
}

const VirtualCharacter& SymRing::kronecker_basis(const Partition& lambda, const Partition& mu) const {
    auto key = lambda <= mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (auto it = kron_cache_.find(key); it != kron_cache_.end()) return it->second;
    }
    int r1 = table_.index_of(key.first);
    int r2 = table_.index_of(key.second);
    ClassFunction prod;
    prod.n = n_;
    prod.values = IntVector::Zero(table_.labels().size());
    for (int c = 0; c < prod.values.size(); ++c)
        prod.values[c] = ck_mul(table_.entry(r1, c), table_.entry(r2, c));
    VirtualCharacter result = decompose(prod);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return kron_cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

VirtualCharacter SymRing::kronecker(const VirtualCharacter& a, const VirtualCharacter& b) const {
    if (a.n != n_ || b.n != n_) throw std::invalid_argument("kronecker: n mismatch");
    VirtualCharacter out;
    out.n = n_;
    for (const auto& [la, ca] : a.coeffs)
        for (const auto& [lb, cb] : b.coeffs) {
            Int c = ck_mul(ca, cb);
            for (const auto& [nu, k] : kronecker_basis(la, lb).coeffs) out.add(nu, ck_mul(c, k));
        }
    return out;
}

Int SymRing::structure_constant(const Partition& lambda, const Partition& mu,
                                const Partition& nu) const {
    if (lambda.size() != n_ || mu.size() != n_ || nu.size() != n_)
        throw std::invalid_argument("structure_constant: size mismatch");
    int r1 = table_.index_of(lambda), r2 = table_.index_of(mu), r3 = table_.index_of(nu);
    __int128 acc = 0;
    for (std::size_t c = 0; c < table_.labels().size(); ++c) {
        __int128 term = static_cast<__int128>(table_.entry(r1, c)) * table_.entry(r2, c);
        term *= table_.entry(r3, c);
        acc += term * table_.class_size(static_cast<int>(c));
    }
    __int128 order = table_.group_order();
    if (acc % order != 0) throw std::runtime_error("structure_constant: non-integral (internal error)");
    return static_cast<Int>(acc / order);
}

int SymRing::level_bruteforce(const Partition& lambda) const {
    if (lambda.size() != n_) throw std::invalid_argument("level_bruteforce: size mismatch");
    if (n_ == 1) return 0;
    Partition v_label = hook_partition(n_, 1);
    int v_row = table_.index_of(v_label);
    int classes = static_cast<int>(table_.labels().size());
    int target = table_.index_of(lambda);
    // Iterate the class function of V^{tensor r}; lambda occurs iff
    // <f, chi_lambda> > 0.
    ClassFunction power;
    power.n = n_;
    power.values = IntVector::Ones(classes);
    for (int r = 0;; ++r) {
        if (inner_product(table_, power, table_.row(target)) > 0) return r;
        if (r > n_) throw std::runtime_error("level_bruteforce: failed to terminate");
        for (int c = 0; c < classes; ++c)
            power.values[c] = ck_mul(power.values[c], table_.entry(v_row, c));
    }
}

VirtualCharacter SymRing::graded_product(const Partition& lambda, const Partition& mu) const {
    int target = level(lambda) + level(mu);
    VirtualCharacter out;
    out.n = n_;
    for (const auto& [nu, c] : kronecker_basis(lambda, mu).coeffs)
        if (level(nu) == target) out.add(nu, c);
    return out;
}

DvirReport SymRing::dvir_check() const {
    DvirReport report;
    report.n = n_;
    const auto& labels = table_.labels();
    for (const auto& lambda : labels)
        for (const auto& mu : labels) {
            const VirtualCharacter& product = kronecker_basis(lambda, mu);
            int sum = level(lambda) + level(mu);
            for (const auto& nu : labels) {
                if (level(nu) == sum) {
                    ++report.graded_triples_checked;
                    Int c = product.coeff(nu);
                    Int l = lr_coefficient(theta(lambda), theta(mu), theta(nu));
                    if (c != l) report.mismatches.push_back({lambda, mu, nu, c, l});
                } else if (level(nu) > sum) {
                    ++report.vanishing_triples_checked;
                    Int c = product.coeff(nu);
                    if (c != 0) report.mismatches.push_back({lambda, mu, nu, c, 0});
                }
            }
        }
    return report;
}

std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i + 1 < lambda.length() && lambda.parts()[i] == lambda.parts()[i + 1]) continue;
        std::vector<int> parts = lambda.parts();
        if (--parts[i] == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
    }
    return out;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 0; i <= lambda.length(); ++i) {
        int cur = lambda.part(i);
        int above = i == 0 ? cur + 1 : lambda.parts()[i - 1];
        if (cur + 1 > above) continue;
        std::vector<int> parts = lambda.parts();
        if (i < lambda.length()) ++parts[i];
        else parts.push_back(1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

VirtualCharacter restrict_char(const VirtualCharacter& a) {
    if (a.n < 2) throw std::invalid_argument("restrict_char: need n >= 2");
    VirtualCharacter out;
    out.n = a.n - 1;
    for (const auto& [label, c] : a.coeffs)
        for (const auto& mu : remove_one_box(label)) out.add(mu, c);
    return out;
}

VirtualCharacter induce_char(const VirtualCharacter& a) {
    VirtualCharacter out;
    out.n = a.n + 1;
    for (const auto& [label, c] : a.coeffs)
        for (const auto& mu : add_one_box(label)) out.add(mu, c);
    return out;
}

VirtualCharacter ind_res(const SymRing& ring, const VirtualCharacter& a) {
    VirtualCharacter young = induce_char(restrict_char(a));
    // Independent route: Ind Res a = a + a (x) V.
    VirtualCharacter check = ring.kronecker(a, ring.irreducible(hook_partition(ring.n(), 1)));
    for (const auto& [label, c] : a.coeffs) check.add(label, c);
    if (!(young == check)) throw std::runtime_error("ind_res: Young rule disagrees with a + a(x)V");
    return young;
}

Int dimension(const Partition& lambda) {
    int n = lambda.size();
    if (n == 0) return 1;
    // n! / prod(hook lengths)
    __int128 num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    __int128 den = 1;
    Partition conj = conjugate(lambda);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j)
            den *= (lambda.parts()[i] - j) + (conj.parts()[j] - i) - 1;
    if (num % den != 0) throw std::runtime_error("dimension: hook product does not divide n!");
    return static_cast<Int>(num / den);
}

} // namespace hookring
