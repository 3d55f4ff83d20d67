#include "hookring/hook_generation.hpp"

#include <sstream>
#include <stdexcept>

namespace hookring {

void HookExpression::add(const Monomial& m, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(m, 0);
    it->second = ck_add(it->second, c);
    if (it->second == 0) terms.erase(it);
}

HookExpression HookExpression::times_symbol(int k) const {
    HookExpression out;
    out.n = n;
    for (const auto& [m, c] : terms) {
        Monomial shifted = m;
        ++shifted[k];
        out.add(shifted, c);
    }
    return out;
}

HookExpression HookExpression::symbol(int n, int k) {
    if (k < 0 || k >= n) throw std::out_of_range("HookExpression::symbol: bad index");
    HookExpression e;
    e.n = n;
    e.terms[{{k, 1}}] = 1;
    return e;
}

std::string HookExpression::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        Int a = c < 0 ? -c : c;
        if (a != 1 || m.empty()) out << a;
        bool star = (a != 1);
        for (const auto& [k, e] : m) {
            if (star) out << "*";
            out << "E" << k;
            if (e > 1) out << "^" << e;
            star = true;
        }
    }
    return out.str();
}

bool precedes(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("precedes: size mismatch");
    if (level(lambda) != level(mu)) return level(lambda) < level(mu);
    return interior(theta(lambda)).size() < interior(theta(mu)).size();
}

namespace {

bool is_hook(const Partition& lambda) {
    return lambda.empty() || interior(theta(lambda)).empty();
}

} // namespace

std::optional<WitnessResult> witness(const SymRing& ring, const Partition& lambda) {
    if (lambda.size() != ring.n()) throw std::invalid_argument("witness: |lambda| != n");
    if (is_hook(lambda)) return std::nullopt;

    Partition alpha = theta(lambda);
    Partition core = interior(alpha);
    int r = boundary_size(alpha);
    std::vector<int> parts{ring.n() - core.size()};
    parts.insert(parts.end(), core.parts().begin(), core.parts().end());
    WitnessResult w;
    w.lambda_hat = Partition(std::move(parts));
    w.k = r;

    if (!(level(w.lambda_hat) < level(lambda)))
        throw std::runtime_error("witness: level did not drop");

    VirtualCharacter product =
        ring.kronecker_basis(w.lambda_hat, hook_partition(ring.n(), r));
    if (product.coeff(lambda) != 1)
        throw std::runtime_error("witness: multiplicity of lambda in lambda_hat (x) E_k is not 1");
    for (const auto& [kappa, c] : product.coeffs) {
        if (kappa == lambda) continue;
        if (!precedes(kappa, lambda))
            throw std::runtime_error("witness: remainder constituent not below lambda");
        w.remainder.n = ring.n();
        w.remainder.add(kappa, c);
    }
    w.remainder.n = ring.n();
    return w;
}

const HookExpression& HookDecomposer::decompose(const Partition& lambda) {
    if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;
    HookExpression result;
    auto w = witness(ring_, lambda);
    if (!w) {
        result = HookExpression::symbol(ring_.n(), boundary_size(theta(lambda)));
    } else {
        result = decompose(w->lambda_hat).times_symbol(w->k);
        for (const auto& [kappa, c] : w->remainder.coeffs) {
            const HookExpression& sub = decompose(kappa);
            for (const auto& [m, sc] : sub.terms) result.add(m, ck_mul(-c, sc));
        }
    }
    return memo_.emplace(lambda, std::move(result)).first->second;
}

HookExpression hook_decompose(const SymRing& ring, const Partition& lambda) {
    HookDecomposer d(ring);
    return d.decompose(lambda);
}

ClassFunction evaluate_expression(const SymRing& ring, const HookExpression& e) {
    int classes = static_cast<int>(ring.table().labels().size());
    ClassFunction total;
    total.n = ring.n();
    total.values = IntVector::Zero(classes);
    for (const auto& [m, c] : e.terms) {
        IntVector prod = IntVector::Ones(classes);
        for (const auto& [k, exp] : m) {
            int row = ring.table().index_of(hook_partition(ring.n(), k));
            for (int rep = 0; rep < exp; ++rep)
                for (int col = 0; col < classes; ++col)
                    prod[col] = ck_mul(prod[col], ring.table().entry(row, col));
        }
        for (int col = 0; col < classes; ++col)
            total.values[col] = ck_add(total.values[col], ck_mul(c, prod[col]));
    }
    return total;
}

bool verify_decomposition(const SymRing& ring, const Partition& lambda, const HookExpression& e) {
    if (lambda.size() != ring.n() || e.n != ring.n())
        throw std::invalid_argument("verify_decomposition: size mismatch");
    ClassFunction value = evaluate_expression(ring, e);
    return value == ring.table().row(lambda);
}

} // namespace hookring
