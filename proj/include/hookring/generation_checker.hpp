#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hookring/sym_characters.hpp"

namespace hookring {

// Submodule of Z^m in row-style Hermite normal form: pivots positive,
// entries above a pivot reduced into [0, pivot), no zero rows. The canonical
// matrix is the lattice's identity.
struct IntegerLattice {
    int dimension = 0;
    IntMatrix basis; // rank x dimension, HNF rows

    int rank() const { return static_cast<int>(basis.rows()); }
    bool operator==(const IntegerLattice& o) const {
        return dimension == o.dimension && basis.rows() == o.basis.rows() && basis == o.basis;
    }
    bool contains(const IntVector& v) const; // back-substitution membership
};

// Canonical HNF of the row span.
IntegerLattice hnf(const std::vector<IntVector>& rows, int dimension);
IntegerLattice hnf(const IntMatrix& rows);

// True iff the lattice is all of Z^m (identity HNF; full rank alone is not
// enough, the index must be 1).
bool is_full(const IntegerLattice& lattice);

// nullopt-style: -1 when not full rank, otherwise the index [Z^m : L].
Int lattice_index(const IntegerLattice& lattice);

// Abstract commutative ring with a distinguished Z-basis: multiplication of
// two basis elements expands over the basis. S_n, G(d,1,2) and B_n all plug
// in through this surface.
struct RingData {
    std::vector<std::string> label_names;
    int unit = 0;
    std::function<IntVector(int, int)> multiply_basis; // (i, j) -> vector over labels

    int size() const { return static_cast<int>(label_names.size()); }
    // Product of an arbitrary element with a basis element.
    IntVector multiply(const IntVector& a, int j) const;
};

struct SaturationStep {
    int iteration;
    int rank;
    Int index; // -1 while not full rank
};

struct SaturationResult {
    IntegerLattice lattice;
    int iterations = 0;
    std::vector<SaturationStep> trace;
};

// A_0 = Z·unit; A_{i+1} = HNF(A_i + sum_b b·A_i); stops at the fixed point.
SaturationResult saturate(const RingData& data, const std::vector<IntVector>& generators);

// Convenience: generators given as basis labels.
SaturationResult saturate(const RingData& data, const std::vector<int>& generator_labels);

} // namespace hookring
