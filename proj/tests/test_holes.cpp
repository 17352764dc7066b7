#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oddhole/generators.hpp"
#include "oddhole/holes.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oddhole;

namespace {

std::set<std::vector<int>> enumerated_cycle_sets(const Graph& g) {
    SearchBudget b(50'000'000);
    auto res = enumerate_induced_cycles(g, 3, g.n(), Parity::Any, b);
    REQUIRE_FALSE(res.exhausted);
    std::set<std::vector<int>> out;
    for (const auto& c : res.cycles) {
        std::vector<int> s = c.v;
        std::sort(s.begin(), s.end());
        bool fresh = out.insert(s).second;
        CHECK(fresh);  // each cycle exactly once up to rotation/reflection
    }
    return out;
}

}  // namespace

TEST_CASE("girth") {
    CHECK(girth(gen_cycle(9)).value() == 9);
    CHECK(girth(petersen()).value() == 5);
    CHECK_FALSE(girth(fixtures::path_graph(6)).has_value());
    CHECK_FALSE(girth(fixtures::star(5)).has_value());
    CHECK(girth(fixtures::complete(4)).value() == 3);
    CHECK(girth(fixtures::cube()).value() == 4);
}

TEST_CASE("shortest_cycle returns an induced cycle of girth length") {
    for (const auto& f : fixtures::small_fixtures()) {
        CAPTURE(f.name);
        auto g = girth(f.graph);
        auto c = shortest_cycle(f.graph);
        REQUIRE(g.has_value() == c.has_value());
        if (c) {
            CHECK(c->length() == *g);
            CHECK(is_induced_cycle(f.graph, *c));
        }
    }
}

TEST_CASE("induced cycle enumeration on the named examples") {
    Graph th = gen_theta(4, 5, 5);
    SearchBudget b1;
    auto all = enumerate_induced_cycles(th, 3, th.n(), Parity::Any, b1);
    std::multiset<int> lens;
    for (const auto& c : all.cycles) lens.insert(c.length());
    CHECK(lens == std::multiset<int>{9, 9, 10});

    SearchBudget b2;
    auto pet_odd = enumerate_induced_cycles(petersen(), 3, 10, Parity::Odd, b2);
    CHECK(pet_odd.cycles.size() == 12);
    for (const auto& c : pet_odd.cycles) CHECK(c.length() == 5);

    SearchBudget b3;
    auto k4holes = enumerate_induced_cycles(fixtures::complete(4), 4, 4,
                                            Parity::Any, b3);
    CHECK(k4holes.cycles.empty());
}

TEST_CASE("enumeration agrees with the all-subsets oracle on every fixture") {
    for (const auto& f : fixtures::small_fixtures()) {
        if (f.graph.n() > 10) continue;
        CAPTURE(f.name);
        CHECK(enumerated_cycle_sets(f.graph) == oracle::induced_cycle_sets(f.graph));
    }
}

TEST_CASE("every emitted cycle is induced, canonically started, in range") {
    for (const auto& f : fixtures::small_fixtures()) {
        if (f.graph.n() > 10) continue;
        SearchBudget b(10'000'000);
        auto res = enumerate_induced_cycles(f.graph, 4, 8, Parity::Even, b);
        for (const auto& c : res.cycles) {
            CAPTURE(f.name, c.v);
            CHECK(is_induced_cycle(f.graph, c));
            CHECK(c.length() >= 4);
            CHECK(c.length() <= 8);
            CHECK(c.length() % 2 == 0);
            CHECK(*std::min_element(c.v.begin(), c.v.end()) == c.v.front());
            CHECK(c.v[1] < c.v.back());
        }
    }
}

TEST_CASE("girth equals the minimum enumerated induced cycle length") {
    for (const auto& f : fixtures::small_fixtures()) {
        if (f.graph.n() > 10) continue;
        CAPTURE(f.name);
        auto sets = oracle::induced_cycle_sets(f.graph);
        auto g = girth(f.graph);
        if (sets.empty()) {
            CHECK_FALSE(g.has_value());
        } else {
            int shortest = g.value();
            int min_len = f.graph.n() + 1;
            for (const auto& s : sets)
                min_len = std::min<int>(min_len, s.size());
            CHECK(shortest == min_len);
        }
    }
}

TEST_CASE("membership verdicts") {
    SearchBudget b1;
    auto c9 = is_in_Gl(gen_cycle(9), 4, b1);
    CHECK(c9.in());

    SearchBudget b2;
    auto pet = is_in_Gl(petersen(), 2, b2);
    CHECK(pet.in());

    SearchBudget b3;
    auto t445 = is_in_Gl(gen_theta(4, 4, 5), 4, b3);
    CHECK(t445.status == MembershipVerdict::Status::OutGl);
    REQUIRE(t445.certificate.has_value());
    CHECK(t445.certificate->length() == 8);

    // girth matches but a long odd hole exists: theta(2,3,4) has a 7-hole
    SearchBudget b4;
    auto t234 = is_in_Gl(gen_theta(2, 3, 4), 2, b4);
    CHECK(t234.status == MembershipVerdict::Status::OutGl);
    REQUIRE(t234.certificate.has_value());
    CHECK(t234.certificate->length() == 7);
    CHECK(t234.certificate->length() % 2 == 1);
    CHECK(is_induced_cycle(gen_theta(2, 3, 4), *t234.certificate));

    // acyclic and wrong-girth cases
    SearchBudget b5;
    CHECK(is_in_Gl(fixtures::path_graph(5), 2, b5).status ==
          MembershipVerdict::Status::OutGl);
    SearchBudget b6;
    CHECK(is_in_Gl(gen_cycle(11), 4, b6).status == MembershipVerdict::Status::OutGl);

    CHECK_THROWS_AS([] { SearchBudget b; is_in_Gl(gen_cycle(5), 1, b); }(),
                    std::invalid_argument);
}

TEST_CASE("membership budget exhaustion is an explicit Unknown") {
    SearchBudget tiny(1);
    auto v = is_in_Gl(petersen(), 2, tiny);
    CHECK(v.status == MembershipVerdict::Status::Unknown);
    CHECK(v.budget.exhausted);
    CHECK_FALSE(v.reason.empty());
}

TEST_CASE("certified members have odd holes only of length 2l+1") {
    for (const auto& [g, l] : {std::pair{gen_cycle(9), 4}, {gen_theta(4, 5, 5), 4},
                               {petersen(), 2}, {gen_theta(2, 3, 3), 2}}) {
        SearchBudget b;
        REQUIRE(is_in_Gl(g, l, b).in());
        SearchBudget b2;
        auto odd = enumerate_induced_cycles(g, 3, g.n(), Parity::Odd, b2);
        for (const auto& c : odd.cycles) CHECK(c.length() == 2 * l + 1);
    }
}
