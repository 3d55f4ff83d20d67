#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hookring/sym_characters.hpp"

namespace hookring {

// Element of R(S_n): integer combination of irreducible labels. Zero
// coefficients are never stored.
struct VirtualCharacter {
    int n = 0;
    std::map<Partition, Int> coeffs;

    bool operator==(const VirtualCharacter&) const = default;

    void add(const Partition& label, Int c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs.try_emplace(label, 0);
        it->second = ck_add(it->second, c);
        if (it->second == 0) coeffs.erase(it);
    }
    Int coeff(const Partition& label) const {
        auto it = coeffs.find(label);
        return it == coeffs.end() ? 0 : it->second;
    }
    std::string to_string() const;
};

struct DvirMismatch {
    Partition lambda, mu, nu;
    Int kronecker_value;
    Int lr_value;
};

struct DvirReport {
    int n = 0;
    Int graded_triples_checked = 0;
    Int vanishing_triples_checked = 0;
    std::vector<DvirMismatch> mismatches;
};

// R(S_n) with a shared character table and a Kronecker cache.
class SymRing {
public:
    explicit SymRing(int n);

    int n() const { return n_; }
    const CharacterTable& table() const { return table_; }

    VirtualCharacter irreducible(const Partition& lambda) const;

    ClassFunction character_of(const VirtualCharacter& a) const;
    VirtualCharacter decompose(const ClassFunction& f) const;

    VirtualCharacter kronecker(const VirtualCharacter& a, const VirtualCharacter& b) const;
    const VirtualCharacter& kronecker_basis(const Partition& lambda, const Partition& mu) const;

    // sum_rho chi_lambda chi_mu chi_nu / z_rho.
    Int structure_constant(const Partition& lambda, const Partition& mu, const Partition& nu) const;

    // Smallest r with lambda appearing in V^{tensor r}.
    int level_bruteforce(const Partition& lambda) const;

    // Kronecker product truncated to constituents of level level(lambda)+level(mu).
    VirtualCharacter graded_product(const Partition& lambda, const Partition& mu) const;

    DvirReport dvir_check() const;

private:
    int n_;
    CharacterTable table_;
    mutable std::map<std::pair<Partition, Partition>, VirtualCharacter> kron_cache_;
    mutable std::mutex cache_mutex_;
};

// Young's rule, linear in the input. Pure diagram combinatorics; no table.
VirtualCharacter restrict_char(const VirtualCharacter& a);
VirtualCharacter induce_char(const VirtualCharacter& a);

// Ind(Res a), computed by Young's rule and cross-checked against
// a + a (x) V inside the given ring.
VirtualCharacter ind_res(const SymRing& ring, const VirtualCharacter& a);

std::vector<Partition> remove_one_box(const Partition& lambda);
std::vector<Partition> add_one_box(const Partition& lambda);

Int dimension(const Partition& lambda); // hook length formula

} // namespace hookring
