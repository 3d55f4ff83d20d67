#include "hookring/reflection_groups.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace hookring {

namespace {

int mod(int a, int d) {
    int r = a % d;
    return r < 0 ? r + d : r;
}

} // namespace

std::string G12Label::to_string() const {
    std::ostringstream out;
    if (planar) out << "(" << i << "," << j << ")";
    else out << "chi(" << a << (sign > 0 ? ",+" : ",-") << ")";
    return out.str();
}

G12Label g12_linear(int a, int sign, int d) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("g12_linear: sign must be +-1");
    G12Label l;
    l.planar = false;
    l.a = mod(a, d);
    l.sign = sign;
    return l;
}

G12Label g12_planar(int i, int j, int d) {
    i = mod(i, d);
    j = mod(j, d);
    if (i == j) throw std::invalid_argument("g12_planar: residues must differ");
    G12Label l;
    l.planar = true;
    l.i = std::min(i, j);
    l.j = std::max(i, j);
    return l;
}

std::vector<G12Label> g12_labels(int d) {
    if (d < 1) throw std::invalid_argument("g12_labels: d must be positive");
    std::vector<G12Label> out;
    for (int a = 0; a < d; ++a)
        for (int s : {1, -1}) out.push_back(g12_linear(a, s, d));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) out.push_back(g12_planar(i, j, d));
    return out;
}

std::map<G12Label, Int> g12_tensor(const G12Label& x, const G12Label& y, int d) {
    std::map<G12Label, Int> out;
    auto add = [&](const G12Label& l) { ++out[l]; };
    if (!x.planar && !y.planar) {
        add(g12_linear(x.a + y.a, x.sign * y.sign, d));
    } else if (x.planar != y.planar) {
        const G12Label& p = x.planar ? x : y;
        const G12Label& l = x.planar ? y : x;
        add(g12_planar(p.i + l.a, p.j + l.a, d));
    } else {
        // Two formal pairs; a degenerate pair (p,p) splits into the two
        // linear characters with residue p.
        for (auto [u, v] : {std::make_pair(x.i + y.i, x.j + y.j), std::make_pair(x.i + y.j, x.j + y.i)}) {
            if (mod(u, d) == mod(v, d)) {
                add(g12_linear(u, 1, d));
                add(g12_linear(u, -1, d));
            } else {
                add(g12_planar(u, v, d));
            }
        }
    }
    return out;
}

double g12_tensor_oracle(const G12Label& x, const G12Label& y, const G12Label& z, int d) {
    // Group elements are (swap?, a, b): the monomial matrix with diagonal
    // exponents a, b, composed with the swap when flagged.
    using C = std::complex<double>;
    const double tau = 2.0 * M_PI / d;
    auto chi = [&](const G12Label& l, bool swapped, int a, int b) -> C {
        if (!l.planar) {
            double ang = tau * l.a * (a + b);
            C v(std::cos(ang), std::sin(ang));
            return swapped && l.sign < 0 ? -v : v;
        }
        if (swapped) return C(0.0, 0.0);
        double a1 = tau * (l.i * a + l.j * b);
        double a2 = tau * (l.j * a + l.i * b);
        return C(std::cos(a1) + std::cos(a2), std::sin(a1) + std::sin(a2));
    };
    C acc(0.0, 0.0);
    for (int swapped = 0; swapped < 2; ++swapped)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                acc += chi(x, swapped, a, b) * chi(y, swapped, a, b) * std::conj(chi(z, swapped, a, b));
    return (acc / static_cast<double>(2 * d * d)).real();
}

RingData g12_ring_data(int d) {
    auto labels = g12_labels(d);
    RingData data;
    for (const auto& l : labels) data.label_names.push_back(l.to_string());
    data.unit = 0; // chi(0,+) is first
    data.multiply_basis = [labels, d](int i, int j) {
        IntVector out = IntVector::Zero(static_cast<int>(labels.size()));
        for (const auto& [l, c] : g12_tensor(labels[i], labels[j], d)) {
            auto it = std::find(labels.begin(), labels.end(), l);
            out[static_cast<int>(it - labels.begin())] += c;
        }
        return out;
    };
    return data;
}

namespace {

GenerationReport run_g12(int d, bool include_v) {
    RingData data = g12_ring_data(d);
    std::vector<int> gens;
    for (int idx = 0; idx < data.size(); ++idx)
        if (idx < 2 * d) gens.push_back(idx); // all linear labels
    if (include_v && d >= 2) {
        auto labels = g12_labels(d);
        G12Label v = g12_planar(0, 1, d);
        auto it = std::find(labels.begin(), labels.end(), v);
        gens.push_back(static_cast<int>(it - labels.begin()));
    }
    SaturationResult sat = saturate(data, gens);
    GenerationReport report;
    report.full = is_full(sat.lattice);
    report.rank = sat.lattice.rank();
    report.index = lattice_index(sat.lattice);
    report.iterations = sat.iterations;
    return report;
}

} // namespace

GenerationReport g12_generation_check(int d) { return run_g12(d, true); }

GenerationReport g12_generation_check_linear_only(int d) { return run_g12(d, false); }

} // namespace hookring
