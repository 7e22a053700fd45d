#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "turan/oracle.hpp"
#include "turan/solver.hpp"

using namespace turan;

namespace {

SolveSpec t_spec(int n, int k, int r) {
    SolveSpec s;
    s.family = Family::T;
    s.n = n;
    s.r = r;
    s.k = k;
    return s;
}

}  // namespace

TEST_CASE("counting lower bound") {
    CHECK(lower_bound_count(6, 5, 3) == 2);
    CHECK(lower_bound_count(7, 5, 3) == 4);
    CHECK(lower_bound_count(5, 4, 3) == 3);
    CHECK(lower_bound_count(5, 5, 3) == 1);
    CHECK_THROWS_AS(lower_bound_count(5, 2, 3), std::invalid_argument);
}

TEST_CASE("min_cover examples") {
    Certificate c65 = min_cover(6, 5, 3);
    CHECK(c65.value == 2);
    CHECK(c65.optimal);
    CHECK(validate_certificate(c65));
    CHECK(*c65.value >= c65.stats.lower_bound_used);

    Certificate c55 = min_cover(5, 5, 3);
    CHECK(c55.value == 1);
    CHECK(validate_certificate(c55));

    CHECK_THROWS_AS(min_cover(5, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_cover(5, 6, 3), std::invalid_argument);
}

TEST_CASE("min_cover matches the exhaustive oracle") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 4}, {5, 5}, {6, 4}, {6, 5}}) {
        Certificate fast = min_cover(n, k, 3);
        Certificate slow = naive_oracle(t_spec(n, k, 3));
        CAPTURE(n);
        CAPTURE(k);
        CHECK(*fast.value == *slow.value);
        CHECK(validate_certificate(fast));
        CHECK(validate_certificate(slow));
        // both witnesses are the colex-lexicographically least optimum
        CHECK(*fast.witness == *slow.witness);
    }
}

TEST_CASE("duality against the maximizing oracle") {
    for (auto [n, k, r] : std::vector<std::tuple<int, int, int>>{
             {5, 4, 3}, {6, 4, 3}, {6, 5, 3}, {5, 3, 2}, {6, 4, 2}}) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(r);
        Certificate cover = min_cover(n, k, r);
        CHECK(*cover.value ==
              static_cast<std::int64_t>(binomial64(n, r)) - naive_max_kfree(n, k, r));
    }
}

TEST_CASE("min_cover_components examples") {
    CHECK(*min_cover_components(6, 5, 3, 2).value == 2);
    CHECK(*min_cover_components(7, 5, 3, 2).value == 5);
    CHECK(*min_cover_components(8, 5, 3, 2).value == 8);

    Certificate c3 = min_cover_components(6, 5, 3, 3);
    CHECK(*c3.value == 4);
    CHECK(validate_certificate(c3));

    SolveSpec spec;
    spec.family = Family::TComponents;
    spec.n = 6;
    spec.r = 3;
    spec.k = 5;
    spec.m = 3;
    CHECK(*naive_oracle(spec).value == 4);

    spec.m = 2;
    CHECK(*naive_oracle(spec).value == 2);

    // more components than the independence budget allows
    Certificate inf = min_cover_components(6, 5, 3, 5);
    CHECK(inf.infeasible);
    CHECK(validate_certificate(inf));
}

TEST_CASE("connected kernels") {
    CHECK(*min_edges_connected_alpha(3, 3, 2).value == 1);
    CHECK(*min_edges_connected_alpha(4, 3, 2).value == 4);
    CHECK(*min_edges_connected_alpha(4, 3, 3).value == 2);
    CHECK(*min_edges_connected_alpha(1, 3, 5).value == 0);
    CHECK(min_edges_connected_alpha(2, 3, 2).infeasible);
    CHECK(min_edges_connected_alpha(5, 3, 1).infeasible);

    Certificate c = min_edges_connected_alpha(5, 3, 3);
    CHECK(validate_certificate(c));
    CHECK(*c.value == 3);  // matches lower_bound_count(5,4,3)
}

TEST_CASE("connected kernel agrees with exhaustion over all 3-graphs on 4 vertices") {
    // oracle: scan all 16 edge subsets for connected graphs with alpha <= s
    auto pool = all_rsubsets(4, 3);
    for (int s = 2; s <= 3; ++s) {
        int best = -1;
        for (std::uint32_t bits = 0; bits < 16u; ++bits) {
            std::vector<Mask> edges;
            for (int i = 0; i < 4; ++i) {
                if (bits & (1u << i)) edges.push_back(pool[i]);
            }
            Hypergraph h(4, 3, edges);
            if (connected_components(h).size() != 1) continue;
            if (independence_number(h) > s) continue;
            if (best < 0 || static_cast<int>(edges.size()) < best) {
                best = static_cast<int>(edges.size());
            }
        }
        CAPTURE(s);
        CHECK(*min_edges_connected_alpha(4, 3, s).value == best);
    }
}

TEST_CASE("tilde_T examples") {
    IndependenceSequence s22 = IndependenceSequence::parse("2,2");

    Certificate c6 = tilde_T(6, 3, s22);
    CHECK(*c6.value == 2);
    CHECK(validate_certificate(c6));

    Certificate c7 = tilde_T(7, 3, s22);
    CHECK(*c7.value == 5);
    CHECK(validate_certificate(c7));

    CHECK(tilde_T(5, 3, s22).infeasible);

    SolveSpec spec;
    spec.family = Family::TildeT;
    spec.n = 6;
    spec.r = 3;
    spec.sequence = s22;
    CHECK(*naive_oracle(spec).value == 2);

    // exact sequences reject vanishing-alpha witnesses: {3} on 4 vertices
    // needs alpha exactly 3, so the complete K_4 (alpha 2) does not count
    Certificate c43 = tilde_T(4, 3, IndependenceSequence::parse("3"));
    CHECK(*c43.value == 2);
    CHECK(independence_number(*c43.witness) == 3);

    // all-singleton sequence: the empty graph
    Certificate ones = tilde_T(3, 2, IndependenceSequence::parse("1,1,1"));
    CHECK(*ones.value == 0);

    // and its infeasible sibling: leftover vertices would add components
    CHECK(tilde_T(4, 2, IndependenceSequence::parse("1,1,1")).infeasible);
}

TEST_CASE("tilde_T matches the exhaustive oracle on mixed sequences") {
    for (const char* seq : {"2,2", "1,2", "3", "1,1,2"}) {
        SolveSpec spec;
        spec.family = Family::TildeT;
        spec.n = 6;
        spec.r = 3;
        spec.sequence = IndependenceSequence::parse(seq);
        Certificate fast = tilde_T(spec.n, spec.r, spec.sequence);
        Certificate slow = naive_oracle(spec);
        CAPTURE(seq);
        CHECK(fast.infeasible == slow.infeasible);
        if (!fast.infeasible) {
            CHECK(*fast.value == *slow.value);
            CHECK(validate_certificate(fast));
        }
    }
}

TEST_CASE("value and canonical witness are thread-count independent") {
    Certificate base = min_cover(7, 5, 3);
    for (int threads : {2, 4}) {
        SolveOptions opts;
        opts.threads = threads;
        Certificate cert = min_cover(7, 5, 3, opts);
        CAPTURE(threads);
        CHECK(*cert.value == *base.value);
        CHECK(*cert.witness == *base.witness);
    }
}

TEST_CASE("enumerate_all lists every labeled optimum once") {
    Certificate cert = min_cover(6, 5, 3, {}, /*enumerate_all=*/true);
    REQUIRE(cert.all_witnesses.has_value());
    CHECK(validate_certificate(cert));

    // oracle count: all 2-subsets of the 20 triples that cover
    int expected = 0;
    auto pool = all_rsubsets(6, 3);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            Hypergraph h(6, 3, {pool[i], pool[j]});
            if (independence_number(h) <= 4) ++expected;
        }
    }
    CHECK(static_cast<int>(cert.all_witnesses->size()) == expected);

    // no duplicates, canonical order, first equals the canonical witness
    for (std::size_t i = 1; i < cert.all_witnesses->size(); ++i) {
        CHECK(!((*cert.all_witnesses)[i] == (*cert.all_witnesses)[i - 1]));
    }
    Certificate single = min_cover(6, 5, 3);
    CHECK(*cert.witness == *single.witness);
    CHECK(cert.all_witnesses->front() == *single.witness);
}

TEST_CASE("node budget yields a flagged non-optimal certificate") {
    SolveOptions opts;
    opts.node_budget = 5;
    Certificate cert = min_cover(7, 5, 3, opts);
    CHECK_FALSE(cert.optimal);
    CHECK_FALSE(cert.value.has_value());
    CHECK_FALSE(cert.infeasible);
    CHECK(validate_certificate(cert));
}

TEST_CASE("solve dispatch and spec validation") {
    SolveSpec spec = t_spec(6, 5, 3);
    CHECK(*solve(spec).value == 2);

    spec.family = Family::TComponents;
    spec.m = 2;
    CHECK(*solve(spec).value == 2);

    SolveSpec tilde;
    tilde.family = Family::TildeT;
    tilde.n = 6;
    tilde.r = 3;
    tilde.sequence = IndependenceSequence::parse("2,2");
    CHECK(*solve(tilde).value == 2);

    SolveSpec conn;
    conn.family = Family::ConnAlpha;
    conn.n = 4;
    conn.r = 3;
    conn.alpha_budget = 2;
    CHECK(*solve(conn).value == 4);

    SolveSpec bad = t_spec(6, 5, 3);
    bad.m = 2;  // component count on family T
    CHECK_THROWS_AS(solve(bad), std::invalid_argument);

    SolveSpec bad2 = t_spec(6, 6, 7);
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("cache keys are canonical") {
    CHECK(t_spec(6, 5, 3).cache_key() == "T:6:5:3");

    SolveSpec tm = t_spec(8, 5, 3);
    tm.family = Family::TComponents;
    tm.m = 2;
    CHECK(tm.cache_key() == "T_components:8:5:3:2");

    SolveSpec tilde;
    tilde.family = Family::TildeT;
    tilde.n = 6;
    tilde.r = 3;
    tilde.sequence = IndependenceSequence::parse("2,2");
    CHECK(tilde.cache_key() == "TildeT:6:-:3:S=2,2");

    SolveSpec conn;
    conn.family = Family::ConnAlpha;
    conn.n = 4;
    conn.r = 3;
    conn.alpha_budget = 2;
    CHECK(conn.cache_key() == "ConnAlpha:4:-:3:s=2");

    SolveSpec all = t_spec(6, 5, 3);
    all.enumerate_all = true;
    CHECK(all.cache_key() == "T:6:5:3:all");
}

TEST_CASE("certificate JSON round trip") {
    Certificate cert = min_cover(6, 5, 3);
    nlohmann::json j = cert.to_json();
    CHECK(j.at("spec").at("family") == "T");
    CHECK(j.at("value") == 2);
    CHECK(j.at("optimal") == true);
    CHECK(j.at("infeasible") == false);
    CHECK(j.at("stats").contains("nodes_expanded"));
    CHECK(j.at("witness").at("edges").size() == 2);

    Certificate back = Certificate::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(validate_certificate(back));
}

TEST_CASE("validation catches tampered certificates") {
    Certificate cert = min_cover(6, 5, 3);
    Certificate broken = cert;
    broken.witness = Hypergraph(6, 3, {});  // edge count no longer matches
    std::string why;
    CHECK_FALSE(validate_certificate(broken, &why));
    CHECK(!why.empty());

    Certificate wrong_value = cert;
    wrong_value.value = 1;
    CHECK_FALSE(validate_certificate(wrong_value));
}

TEST_CASE("oracle budget is enforced") {
    SolveSpec spec = t_spec(6, 5, 3);
    CHECK_THROWS_AS(naive_oracle(spec, 10), ResourceLimitError);
}

TEST_CASE("oversized instances are rejected up front") {
    CHECK_THROWS_AS(min_cover(40, 20, 3), ResourceLimitError);
}
