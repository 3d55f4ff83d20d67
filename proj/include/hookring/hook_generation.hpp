#pragma once

#include <map>
#include <optional>
#include <string>

#include "hookring/rep_ring.hpp"

namespace hookring {

// Integer polynomial in the formal symbols E_0..E_{n-1}, each standing for a
// hook character. A monomial is its sorted exponent multiset, stored as a
// map from symbol index to exponent.
struct HookExpression {
    int n = 0;
    using Monomial = std::map<int, int>; // symbol index -> exponent, exponents > 0
    std::map<Monomial, Int> terms;

    bool operator==(const HookExpression&) const = default;

    void add(const Monomial& m, Int c);
    HookExpression times_symbol(int k) const; // multiply every term by E_k
    std::string to_string() const;

    static HookExpression symbol(int n, int k);
};

// Outcome of the descent step for a non-hook lambda: lambda_hat (x) E_k
// contains lambda once, everything else strictly below it.
struct WitnessResult {
    Partition lambda_hat;
    int k = 0;
    VirtualCharacter remainder; // lambda_hat (x) Lambda^k V minus lambda
};

// Strict order: smaller level first, then smaller |theta(.)interior|.
bool precedes(const Partition& lambda, const Partition& mu);

// For a hook, nullopt (the base case E_k); otherwise the verified witness.
std::optional<WitnessResult> witness(const SymRing& ring, const Partition& lambda);

class HookDecomposer {
public:
    explicit HookDecomposer(const SymRing& ring) : ring_(ring) {}

    const HookExpression& decompose(const Partition& lambda);

    const SymRing& ring() const { return ring_; }

private:
    const SymRing& ring_;
    std::map<Partition, HookExpression> memo_;
};

HookExpression hook_decompose(const SymRing& ring, const Partition& lambda);

// Evaluates e by repeated Kronecker products of hooks and compares with the
// character of lambda on every class.
bool verify_decomposition(const SymRing& ring, const Partition& lambda, const HookExpression& e);

ClassFunction evaluate_expression(const SymRing& ring, const HookExpression& e);

} // namespace hookring
