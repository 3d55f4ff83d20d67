#include <doctest.h>

#include "hookring/partition.hpp"

using namespace hookring;

TEST_CASE("parse_partition reads bracketed and bare lists") {
    CHECK(parse_partition("[3,2,1,1]") == Partition{3, 2, 1, 1});
    CHECK(parse_partition("3,2,1,1") == Partition{3, 2, 1, 1});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_partition(" [ 5 ] ") == Partition{5});
}

TEST_CASE("parse_partition rejects bad input") {
    CHECK_THROWS_AS(parse_partition("[2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[1,0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[a,b]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[1,2"), std::invalid_argument);
}

TEST_CASE("all_partitions counts and order") {
    CHECK(all_partitions(0).size() == 1);
    CHECK(all_partitions(0)[0] == Partition{});
    CHECK(all_partitions(4).size() == 5);
    CHECK(all_partitions(8).size() == 22);
    // reverse-lex: [n] first, [1^n] last
    auto p5 = all_partitions(5);
    CHECK(p5.front() == Partition{5});
    CHECK(p5.back() == Partition{1, 1, 1, 1, 1});
    // no duplicates, all of size n
    for (std::size_t i = 0; i < p5.size(); ++i) {
        CHECK(p5[i].size() == 5);
        for (std::size_t j = i + 1; j < p5.size(); ++j) CHECK(p5[i] != p5[j]);
    }
}

TEST_CASE("theta deletes the first row") {
    CHECK(theta(Partition{5, 3, 2, 2}) == Partition{3, 2, 2});
    CHECK(theta(Partition{6}) == Partition{});
    CHECK(theta(hook_partition(7, 3)) == Partition{1, 1, 1});
    CHECK(theta(Partition{}) == Partition{});
}

TEST_CASE("interior and boundary") {
    CHECK(interior(Partition{3, 2, 2}) == Partition{2, 1, 1});
    CHECK(interior(Partition{1, 1, 1}) == Partition{});
    CHECK(interior(Partition{}) == Partition{});
    CHECK(boundary_size(Partition{3, 2, 2}) == 3);
    CHECK(boundary_size(Partition{1, 1, 1, 1}) == 4);
    CHECK(boundary_size(Partition{}) == 0);
}

TEST_CASE("interior + boundary = size, over all partitions up to 9") {
    for (int n = 0; n <= 9; ++n)
        for (const auto& a : all_partitions(n))
            CHECK(interior(a).size() + boundary_size(a) == a.size());
}

TEST_CASE("delta counts distinct part values") {
    CHECK(delta(Partition{2, 1}) == 2);
    CHECK(delta(Partition{7}) == 1);
    CHECK(delta(Partition{2, 2}) == 1);
    CHECK(delta(Partition{}) == 0);
}

TEST_CASE("hook_partition") {
    CHECK(hook_partition(5, 2) == Partition{3, 1, 1});
    CHECK(hook_partition(6, 0) == Partition{6});
    CHECK(hook_partition(6, 5) == Partition{1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(hook_partition(5, 5), std::out_of_range);
    CHECK_THROWS_AS(hook_partition(5, -1), std::out_of_range);
}

TEST_CASE("level equals |theta|") {
    CHECK(level(Partition{3, 1}) == 1);
    CHECK(level(Partition{6}) == 0);
    CHECK(level(Partition{1, 1, 1, 1}) == 3);
    for (int n = 0; n <= 9; ++n)
        for (const auto& lambda : all_partitions(n)) CHECK(level(lambda) == theta(lambda).size());
}

TEST_CASE("centralizer orders and class sizes") {
    CHECK(centralizer_order(Partition{1, 1, 1}) == 6);
    CHECK(centralizer_order(Partition{2, 1}) == 2);
    CHECK(centralizer_order(Partition{3}) == 3);
    // class sizes sum to n!
    for (int n = 1; n <= 9; ++n) {
        Int total = 0;
        for (const auto& rho : all_partitions(n)) total += factorial(n) / centralizer_order(rho);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("theta of hooks and interior of columns") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < n; ++k) {
            Partition t = theta(hook_partition(n, k));
            CHECK(t.size() == k);
            CHECK(interior(t) == Partition{});
        }
}

TEST_CASE("conjugate is an involution") {
    for (const auto& lambda : all_partitions(7)) CHECK(conjugate(conjugate(lambda)) == lambda);
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
}
