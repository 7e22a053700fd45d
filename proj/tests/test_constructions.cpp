#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turan/constructions.hpp"
#include "turan/oracle.hpp"

using namespace turan;

TEST_CASE("turan graph examples") {
    CHECK(turan_graph(6, 3).edge_count() == 12);
    CHECK(turan_graph(5, 2).edge_count() == 6);
    CHECK(turan_graph(5, 5).edge_count() == binomial64(5, 2));
    CHECK_THROWS_AS(turan_graph(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(turan_graph(4, 0), std::invalid_argument);
}

TEST_CASE("turan graph attains the extremal edge count") {
    // |E(T_{n,k-1})| = max edges of a K_k-free graph, against the maximizing
    // oracle; larger (n,k=3) instances are out of enumeration reach.
    for (int n = 4; n <= 6; ++n) {
        for (int k = 3; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(static_cast<std::int64_t>(turan_graph(n, k - 1).edge_count()) ==
                  naive_max_kfree(n, k, 2));
        }
    }
    for (int k = 4; k <= 7; ++k) {
        CHECK(static_cast<std::int64_t>(turan_graph(7, k - 1).edge_count()) ==
              naive_max_kfree(7, k, 2));
    }
    for (int k = 6; k <= 8; ++k) {
        CHECK(static_cast<std::int64_t>(turan_graph(8, k - 1).edge_count()) ==
              naive_max_kfree(8, k, 2));
    }
}

TEST_CASE("turan graph is K_{k+1}-free with balanced classes") {
    for (int n = 3; n <= 8; ++n) {
        for (int k = 2; k < n; ++k) {
            Hypergraph t = turan_graph(n, k);
            // complete multipartite: independence number equals the largest class
            CHECK(independence_number(t) == (n + k - 1) / k);
        }
    }
}

TEST_CASE("disjoint complete unions") {
    Hypergraph a = disjoint_complete(3, {3, 3});
    CHECK(a.edge_count() == 2);
    CHECK(independence_sequence(a).entries() == std::vector<int>{2, 2});

    Hypergraph b = disjoint_complete(3, {3, 4});
    CHECK(b.edge_count() == 5);
    CHECK(independence_sequence(b).entries() == std::vector<int>{2, 2});
    // largest part first: the K_4 occupies vertices 0..3
    CHECK(b.edges().front() == 0b0111);

    Hypergraph c = disjoint_complete(3, {1, 1, 4});
    CHECK(c.edge_count() == 4);
    CHECK(independence_sequence(c).entries() == std::vector<int>{1, 1, 2});

    CHECK_THROWS_AS(disjoint_complete(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(disjoint_complete(3, {3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(disjoint_complete(1, {3}), std::invalid_argument);
}

TEST_CASE("disjoint complete edge counts are exact") {
    for (int r : {2, 3, 4}) {
        for (int a = 1; a <= 6; ++a) {
            for (int b = a; b <= 6; ++b) {
                CHECK(disjoint_complete(r, {a, b}).edge_count() ==
                      binomial64(a, r) + binomial64(b, r));
            }
        }
    }
}

TEST_CASE("balanced beats unbalanced") {
    for (int r = 2; r <= 4; ++r) {
        for (int a = r + 1; a <= 9; ++a) {
            for (int b = a; b <= 9; ++b) {
                CAPTURE(r);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(disjoint_complete(r, {a, b}).edge_count() <
                      disjoint_complete(r, {a - 1, b + 1}).edge_count());
            }
        }
    }
}

TEST_CASE("balanced complete union") {
    CHECK(balanced_complete_union(12, 3, 2).edge_count() == 40);
    CHECK(balanced_complete_union(7, 3, 2).edge_count() == 5);
    CHECK(balanced_complete_union(6, 3, 6).edge_count() == 0);
    CHECK_THROWS_AS(balanced_complete_union(3, 3, 4), std::invalid_argument);
}

TEST_CASE("two-part witness") {
    CHECK(thm_max_witness(6).edge_count() == 2);
    CHECK(thm_max_witness(7).edge_count() == 5);
    CHECK(thm_max_witness(10).edge_count() == 20);
    for (int n = 6; n <= 12; ++n) {
        CHECK(satisfies_covering(thm_max_witness(n), 5));
        CHECK(connected_components(thm_max_witness(n)).size() == 2);
    }
    CHECK_THROWS_AS(thm_max_witness(5), std::invalid_argument);
}
