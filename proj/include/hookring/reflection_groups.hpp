#pragma once

#include <map>
#include <string>
#include <vector>

#include "hookring/generation_checker.hpp"
#include "hookring/partition.hpp"

namespace hookring {

// ---------------------------------------------------------------------------
// G(d,1,2): the rank-2 groups generated by diag(1,zeta) and the swap.
// ---------------------------------------------------------------------------

// Either a linear character (residue a mod d, sign on the swap) or a
// two-dimensional representation indexed by an unordered pair of distinct
// residues, stored with 0 <= i < j < d.
struct G12Label {
    bool planar = false;
    int a = 0;    // linear: residue
    int sign = 1; // linear: value on the swap, +1 or -1
    int i = 0, j = 0;

    bool operator==(const G12Label&) const = default;
    auto operator<=>(const G12Label&) const = default;
    std::string to_string() const;
};

G12Label g12_linear(int a, int sign, int d);
G12Label g12_planar(int i, int j, int d);

// 2d linear labels then the d(d-1)/2 planar ones, canonical order.
std::vector<G12Label> g12_labels(int d);

// Closed-form tensor rules: products land in non-negative combinations.
std::map<G12Label, Int> g12_tensor(const G12Label& x, const G12Label& y, int d);

// Floating-point structure constant from the matrix models, for validation.
double g12_tensor_oracle(const G12Label& x, const G12Label& y, const G12Label& z, int d);

RingData g12_ring_data(int d);

struct GenerationReport {
    bool full = false;
    int rank = 0;
    Int index = -1; // -1 when not full rank
    int iterations = 0;
};

// B = {V = (0,1)} union all linear labels; d = 1 degenerates to S_2 and uses
// the linear labels alone.
GenerationReport g12_generation_check(int d);
GenerationReport g12_generation_check_linear_only(int d);

// ---------------------------------------------------------------------------
// Hyperoctahedral groups B_n = Z/2 wr S_n.
// ---------------------------------------------------------------------------

// Irreducible label: (lambda, mu) with |lambda| + |mu| = n.
struct BnLabel {
    Partition lambda, mu;
    bool operator==(const BnLabel&) const = default;
    auto operator<=>(const BnLabel&) const = default;
    std::string to_string() const;
};

// Conjugacy class: cycle type of the positive cycles and of the negative ones.
struct SignedCycleType {
    Partition positive, negative;
    bool operator==(const SignedCycleType&) const = default;
    auto operator<=>(const SignedCycleType&) const = default;
    std::string to_string() const;
};

std::vector<BnLabel> bn_labels(int n);
std::vector<SignedCycleType> bn_classes(int n);

Int bn_centralizer_order(const SignedCycleType& c);

// Exact character value by induction from B_k x B_{n-k} with combinatorial
// class fusion.
Int bn_character(const BnLabel& label, const SignedCycleType& cls);

class BnCharacterTable {
public:
    explicit BnCharacterTable(int n);

    int n() const { return n_; }
    const std::vector<BnLabel>& labels() const { return labels_; }
    const std::vector<SignedCycleType>& classes() const { return classes_; }
    Int entry(int row, int col) const { return values_(row, col); }
    Int centralizer(int col) const { return centralizers_[col]; }
    Int group_order() const { return group_order_; }
    int index_of(const BnLabel& l) const;

    // <f, row> with centralizer weights; errors on non-integrality.
    Int decompose_coefficient(const IntVector& f, int row) const;
    IntVector decompose(const IntVector& f) const; // coefficients over labels

private:
    int n_;
    std::vector<BnLabel> labels_;
    std::vector<SignedCycleType> classes_;
    IntMatrix values_;
    std::vector<Int> centralizers_;
    Int group_order_;
};

enum class BnReflectionRep { V, U }; // V: signed permutations (dim n); U: pullback of the
                                     // standard S_n representation (dim n-1)

// chi_{Lambda^k rep}(cls) for k = 0..dim, from per-cycle eigenvalue factors.
std::vector<Int> exterior_power_characters(BnReflectionRep rep, const SignedCycleType& cls, int n);

struct BnExperimentReport {
    int n = 0;
    GenerationReport hooks_only;  // B = {Lambda^k V}
    GenerationReport hooks_and_u; // B = {Lambda^k V, Lambda^k U}
};

RingData bn_ring_data(const BnCharacterTable& table);

// Decomposition of Lambda^k rep over Irr(B_n), as a vector over the labels.
IntVector bn_exterior_power_vector(const BnCharacterTable& table, BnReflectionRep rep, int k);

BnExperimentReport bn_experiments(int n);

} // namespace hookring
