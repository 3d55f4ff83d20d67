#include "hookring/generation_checker.hpp"

#include <stdexcept>

namespace hookring {

namespace {

void row_sub(IntMatrix& m, int target, int source, Int q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c)
        m(target, c) = ck_sub(m(target, c), ck_mul(q, m(source, c)));
}

// Floor division (HNF reduction needs entries in [0, pivot)).
Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

IntegerLattice hnf(const IntMatrix& rows) {
    IntMatrix m = rows;
    int nrows = static_cast<int>(m.rows());
    int ncols = static_cast<int>(m.cols());
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        // Gcd elimination in column c among rows >= r, smallest pivot first.
        for (;;) {
            int best = -1;
            for (int i = r; i < nrows; ++i)
                if (m(i, c) != 0 && (best == -1 || std::abs(m(i, c)) < std::abs(m(best, c))))
                    best = i;
            if (best == -1) break;
            bool cleared = true;
            for (int i = r; i < nrows; ++i) {
                if (i == best || m(i, c) == 0) continue;
                row_sub(m, i, best, floor_div(m(i, c), m(best, c)));
                if (m(i, c) != 0) cleared = false;
            }
            if (cleared) {
                if (best != r) m.row(best).swap(m.row(r));
                if (m(r, c) < 0) m.row(r) = -m.row(r);
                // Reduce entries above the pivot into [0, pivot).
                for (int i = 0; i < r; ++i) row_sub(m, i, r, floor_div(m(i, c), m(r, c)));
                ++r;
                break;
            }
        }
    }
    IntegerLattice out;
    out.dimension = ncols;
    out.basis = m.topRows(r);
    return out;
}

IntegerLattice hnf(const std::vector<IntVector>& rows, int dimension) {
    IntMatrix m(rows.size(), dimension);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dimension) throw std::invalid_argument("hnf: vector length mismatch");
        m.row(i) = rows[i].transpose();
    }
    return hnf(m);
}

bool IntegerLattice::contains(const IntVector& v) const {
    if (v.size() != dimension) throw std::invalid_argument("contains: length mismatch");
    IntVector rem = v;
    for (int i = 0; i < rank(); ++i) {
        int pivot_col = 0;
        while (pivot_col < dimension && basis(i, pivot_col) == 0) ++pivot_col;
        if (pivot_col == dimension) continue;
        Int num = rem[pivot_col];
        Int den = basis(i, pivot_col);
        if (num % den != 0) return false;
        Int q = num / den;
        for (int c = 0; c < dimension; ++c) rem[c] = ck_sub(rem[c], ck_mul(q, basis(i, c)));
    }
    return rem.isZero();
}

bool is_full(const IntegerLattice& lattice) {
    if (lattice.rank() != lattice.dimension) return false;
    return lattice.basis.isIdentity();
}

Int lattice_index(const IntegerLattice& lattice) {
    if (lattice.rank() != lattice.dimension) return -1;
    Int idx = 1;
    for (int i = 0; i < lattice.dimension; ++i) idx = ck_mul(idx, lattice.basis(i, i));
    return idx;
}

IntVector RingData::multiply(const IntVector& a, int j) const {
    IntVector out = IntVector::Zero(size());
    for (int i = 0; i < size(); ++i) {
        if (a[i] == 0) continue;
        IntVector prod = multiply_basis(i, j);
        for (int c = 0; c < size(); ++c) out[c] = ck_add(out[c], ck_mul(a[i], prod[c]));
    }
    return out;
}

SaturationResult saturate(const RingData& data, const std::vector<IntVector>& generators) {
    int m = data.size();
    SaturationResult result;
    IntVector unit = IntVector::Zero(m);
    unit[data.unit] = 1;
    result.lattice = hnf({unit}, m);
    for (;;) {
        std::vector<IntVector> rows;
        for (int i = 0; i < result.lattice.rank(); ++i)
            rows.push_back(result.lattice.basis.row(i).transpose());
        for (const auto& g : generators)
            for (int i = 0; i < result.lattice.rank(); ++i) {
                // g . v = sum_j v_j (g . e_j)
                IntVector v = result.lattice.basis.row(i).transpose();
                IntVector prod = IntVector::Zero(m);
                for (int j = 0; j < m; ++j) {
                    if (v[j] == 0) continue;
                    IntVector gj = data.multiply(g, j);
                    for (int c = 0; c < m; ++c) prod[c] = ck_add(prod[c], ck_mul(v[j], gj[c]));
                }
                rows.push_back(prod);
            }
        IntegerLattice next = hnf(rows, m);
        ++result.iterations;
        result.trace.push_back({result.iterations, next.rank(), lattice_index(next)});
        if (next == result.lattice) break;
        result.lattice = std::move(next);
    }
    return result;
}

SaturationResult saturate(const RingData& data, const std::vector<int>& generator_labels) {
    std::vector<IntVector> gens;
    for (int l : generator_labels) {
        IntVector v = IntVector::Zero(data.size());
        v[l] = 1;
        gens.push_back(v);
    }
    return saturate(data, gens);
}

} // namespace hookring
