#include <doctest.h>

#include "hookring/littlewood_richardson.hpp"
#include "hookring/rep_ring.hpp"

using namespace hookring;

TEST_CASE("kronecker on S_3: [2,1] (x) [2,1]") {
    SymRing ring(3);
    VirtualCharacter v = ring.irreducible(Partition{2, 1});
    VirtualCharacter prod = ring.kronecker(v, v);
    CHECK(prod.coeff(Partition{3}) == 1);
    CHECK(prod.coeff(Partition{2, 1}) == 1);
    CHECK(prod.coeff(Partition{1, 1, 1}) == 1);
    CHECK(prod.coeffs.size() == 3);
}

TEST_CASE("tensoring with trivial and with sign") {
    for (int n = 2; n <= 7; ++n) {
        SymRing ring(n);
        VirtualCharacter triv = ring.irreducible(Partition{n});
        VirtualCharacter sign = ring.irreducible(Partition(std::vector<int>(n, 1)));
        for (const auto& lambda : ring.table().labels()) {
            VirtualCharacter v = ring.irreducible(lambda);
            CHECK(ring.kronecker(v, triv) == v);
            VirtualCharacter twisted = ring.kronecker(v, sign);
            CHECK(twisted.coeffs.size() == 1);
            CHECK(twisted.coeff(conjugate(lambda)) == 1);
        }
    }
}

TEST_CASE("structure constants") {
    SymRing ring(5);
    CHECK(ring.structure_constant(Partition{4, 1}, Partition{4, 1}, Partition{3, 2}) == 1);
    for (const auto& lambda : ring.table().labels())
        for (const auto& nu : ring.table().labels())
            CHECK(ring.structure_constant(lambda, Partition{5}, nu) == (lambda == nu ? 1 : 0));
}

TEST_CASE("structure constant total symmetry, n <= 8 exhaustive for n <= 5, sampled above") {
    for (int n = 2; n <= 5; ++n) {
        SymRing ring(n);
        const auto& labels = ring.table().labels();
        for (const auto& a : labels)
            for (const auto& b : labels)
                for (const auto& c : labels) {
                    Int v = ring.structure_constant(a, b, c);
                    CHECK(v == ring.structure_constant(a, c, b));
                    CHECK(v == ring.structure_constant(b, a, c));
                    CHECK(v == ring.structure_constant(c, b, a));
                }
    }
}

TEST_CASE("dimension conservation under kronecker, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        SymRing ring(n);
        const auto& labels = ring.table().labels();
        for (const auto& lambda : labels)
            for (const auto& mu : labels) {
                Int total = 0;
                for (const auto& [nu, c] : ring.kronecker_basis(lambda, mu).coeffs) {
                    CHECK(c > 0);
                    total += c * dimension(nu);
                }
                CHECK(total == dimension(lambda) * dimension(mu));
            }
    }
}

TEST_CASE("restriction by Young's rule") {
    SymRing ring(7);
    VirtualCharacter v = ring.irreducible(Partition{3, 2, 1, 1});
    VirtualCharacter res = restrict_char(v);
    CHECK(res.coeff(Partition{2, 2, 1, 1}) == 1);
    CHECK(res.coeff(Partition{3, 1, 1, 1}) == 1);
    CHECK(res.coeff(Partition{3, 2, 1}) == 1);
    CHECK(res.coeffs.size() == 3);
    VirtualCharacter triv;
    triv.n = 7;
    triv.add(Partition{7}, 1);
    CHECK(restrict_char(triv).coeff(Partition{6}) == 1);
    CHECK(restrict_char(triv).coeffs.size() == 1);
}

TEST_CASE("induction of the trivial character is 1 + V") {
    for (int n = 2; n <= 8; ++n) {
        VirtualCharacter triv;
        triv.n = n - 1;
        if (n >= 2) triv.add(n - 1 >= 1 ? Partition{n - 1} : Partition{}, 1);
        VirtualCharacter ind = induce_char(triv);
        CHECK(ind.coeff(Partition{n}) == 1);
        CHECK(ind.coeff(hook_partition(n, 1)) == 1);
        CHECK(ind.coeffs.size() == 2);
    }
}

TEST_CASE("induced dimension is n times the input dimension") {
    for (const auto& lambda : all_partitions(5)) {
        VirtualCharacter v;
        v.n = 5;
        v.add(lambda, 1);
        Int dim = 0;
        for (const auto& [mu, c] : induce_char(v).coeffs) dim += c * dimension(mu);
        CHECK(dim == 6 * dimension(lambda));
    }
}

TEST_CASE("Frobenius reciprocity on all basis pairs, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        SymRing low(n - 1), high(n);
        for (const auto& a : low.table().labels())
            for (const auto& b : high.table().labels()) {
                VirtualCharacter va = low.irreducible(a);
                VirtualCharacter vb = high.irreducible(b);
                Int lhs = induce_char(va).coeff(b);
                Int rhs = restrict_char(vb).coeff(a);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("ind_res agrees with a + a(x)V and the hand value for [2,1]") {
    SymRing ring(3);
    VirtualCharacter v = ring.irreducible(Partition{2, 1});
    VirtualCharacter ir = ind_res(ring, v);
    CHECK(ir.coeff(Partition{3}) == 1);
    CHECK(ir.coeff(Partition{1, 1, 1}) == 1);
    CHECK(ir.coeff(Partition{2, 1}) == 2);
    CHECK(delta(Partition{2, 1}) == 2);

    for (int n = 2; n <= 7; ++n) {
        SymRing r(n);
        for (const auto& lambda : r.table().labels()) CHECK_NOTHROW(ind_res(r, r.irreducible(lambda)));
        VirtualCharacter triv = r.irreducible(Partition{n});
        VirtualCharacter ir2 = ind_res(r, triv);
        CHECK(ir2.coeff(Partition{n}) == 1);
        CHECK(ir2.coeff(hook_partition(n, 1)) == 1);
        CHECK(ir2.coeffs.size() == 2);
    }
}

TEST_CASE("self-multiplicity in ind_res is delta(lambda)") {
    for (int n = 2; n <= 7; ++n) {
        SymRing ring(n);
        for (const auto& lambda : ring.table().labels())
            CHECK(ind_res(ring, ring.irreducible(lambda)).coeff(lambda) == delta(lambda));
    }
}

TEST_CASE("level formula in both directions, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        SymRing ring(n);
        for (const auto& lambda : ring.table().labels())
            CHECK(ring.level_bruteforce(lambda) == n - lambda.part(0));
    }
}

TEST_CASE("filtration sub-multiplicativity, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        SymRing ring(n);
        const auto& labels = ring.table().labels();
        for (const auto& lambda : labels)
            for (const auto& mu : labels)
                for (const auto& [nu, c] : ring.kronecker_basis(lambda, mu).coeffs)
                    CHECK(level(nu) <= level(lambda) + level(mu));
    }
}

TEST_CASE("graded product") {
    for (int n = 4; n <= 7; ++n) {
        SymRing ring(n);
        Partition v_label = hook_partition(n, 1);
        VirtualCharacter vv = ring.graded_product(v_label, v_label);
        CHECK(vv.coeff(Partition{n - 2, 2}) == 1);
        CHECK(vv.coeff(Partition{n - 2, 1, 1}) == 1);
        CHECK(vv.coeffs.size() == 2);
        for (const auto& mu : ring.table().labels()) {
            VirtualCharacter t = ring.graded_product(Partition{n}, mu);
            CHECK(t.coeff(mu) == 1);
            CHECK(t.coeffs.size() == 1);
        }
    }
}

TEST_CASE("graded product coefficients are LR coefficients of theta images") {
    SymRing ring(6);
    const auto& labels = ring.table().labels();
    for (const auto& lambda : labels)
        for (const auto& mu : labels)
            for (const auto& [nu, c] : ring.graded_product(lambda, mu).coeffs)
                CHECK(c == lr_coefficient(theta(lambda), theta(mu), theta(nu)));
}

TEST_CASE("dvir sweep clean for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        DvirReport report = SymRing(n).dvir_check();
        CHECK(report.mismatches.empty());
        CHECK(report.graded_triples_checked > 0);
    }
}
