#include <doctest.h>

#include <random>

#include "hsz/artin.hpp"

using namespace hsz;

namespace {

BraidWord random_braid(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> idx(1, strands - 1);
    std::bernoulli_distribution flip(0.5);
    std::vector<Letter> letters;
    for (int k = 0; k < length; ++k) letters.push_back({idx(rng), flip(rng) ? 1 : -1});
    return BraidWord(strands, std::move(letters));
}

}  // namespace

TEST_CASE("parse_word tokenizes in textual order") {
    const BraidWord w = parse_word("t1 t2 T1", 4);
    REQUIRE(w.size() == 3);
    CHECK(w.letters()[0] == Letter{1, 1});
    CHECK(w.letters()[1] == Letter{2, 1});
    CHECK(w.letters()[2] == Letter{1, -1});
    CHECK(w.to_string() == "t1 t2 T1");

    CHECK(parse_word("", 4).empty());
    CHECK(parse_word("   ", 4).empty());
    CHECK(parse_word("  t3   T2 ", 4).to_string() == "t3 T2");
    CHECK(parse_word("t10", 12).letters()[0].index == 10);
}

TEST_CASE("parse_word rejects bad input") {
    CHECK_THROWS_AS(parse_word("t9", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("t0", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("x1", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("t", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("t-1", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("t1,t2", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("t1\tt2", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("t99999999999999", 4), InvalidInput);
    CHECK_THROWS_AS(parse_word("t1", 1), InvalidInput);
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
    CHECK(free_reduce(parse_word("t1 T1", 4)).empty());
    CHECK(free_reduce(parse_word("t1 t2 T2 t3", 4)) == parse_word("t1 t3", 4));
    CHECK(free_reduce(parse_word("t1 t2", 4)) == parse_word("t1 t2", 4));
    CHECK(free_reduce(parse_word("t1 t2 t3 T3 T2 T1", 4)).empty());
    CHECK(free_reduce(parse_word("t1 t1", 4)).size() == 2);
}

TEST_CASE("free_reduce output is reduced, idempotent and keeps deg") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const BraidWord w = random_braid(rng, 5, 40);
        const BraidWord r = free_reduce(w);
        CHECK(deg(r) == deg(w));
        CHECK(free_reduce(r) == r);
        for (std::size_t k = 1; k < r.size(); ++k) {
            const auto& a = r.letters()[k - 1];
            const auto& b = r.letters()[k];
            CHECK_FALSE((a.index == b.index && a.sign == -b.sign));
        }
    }
}

TEST_CASE("deg is a character") {
    CHECK(deg(h_word(2)) == 5);
    CHECK(deg(BraidWord(4)) == 0);
    CHECK(deg(parse_word("t1 T2", 4)) == 0);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const BraidWord u = random_braid(rng, 6, 17);
        const BraidWord v = random_braid(rng, 6, 23);
        CHECK(deg(u * v) == deg(u) + deg(v));
        CHECK(deg(u.inverse()) == -deg(u));
    }
}

TEST_CASE("word algebra") {
    const BraidWord w = parse_word("t1 T2 t3", 4);
    CHECK(w.inverse().to_string() == "T3 t2 T1");
    CHECK(w.power(2).to_string() == "t1 T2 t3 t1 T2 t3");
    CHECK(w.power(-1) == w.inverse());
    CHECK(w.power(0).empty());
    CHECK_THROWS_AS(w * BraidWord(6), InvalidInput);
    CHECK_THROWS_AS(BraidWord(4, {{4, 1}}), InvalidInput);
    CHECK_THROWS_AS(BraidWord(4, {{1, 2}}), InvalidInput);
}

TEST_CASE("artin_relations words have length k + 2") {
    SUBCASE("single edge") {
        const auto rel = artin_relations(path_graph(2));
        REQUIRE(rel.size() == 1);
        CHECK(rel[0].lhs.to_string() == "t1 t2 t1");
        CHECK(rel[0].rhs.to_string() == "t2 t1 t2");
    }
    SUBCASE("no edge") {
        const auto rel = artin_relations(ArtinGraph({1, 2}));
        REQUIRE(rel.size() == 1);
        CHECK(rel[0].lhs.to_string() == "t1 t2");
        CHECK(rel[0].rhs.to_string() == "t2 t1");
    }
    SUBCASE("double edge") {
        ArtinGraph g({1, 2});
        g.add_edge(1, 2, 2);
        const auto rel = artin_relations(g);
        REQUIRE(rel.size() == 1);
        CHECK(rel[0].lhs.to_string() == "t1 t2 t1 t2");
        CHECK(rel[0].rhs.to_string() == "t2 t1 t2 t1");
    }
}

TEST_CASE("A_{2g+1} relations reproduce the braid group presentation") {
    for (int g = 1; g <= 5; ++g) {
        const int n = 2 * g + 1;
        const auto rel = artin_relations(path_graph(n));
        CHECK(rel.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto& r : rel) {
            CHECK(r.lhs.strands() == 2 * g + 2);
            const int i = r.lhs.letters()[0].index;
            const int j = r.lhs.letters()[1].index;
            if (std::abs(i - j) == 1) {
                CHECK(r.lhs == BraidWord(2 * g + 2, {{i, 1}, {j, 1}, {i, 1}}));
                CHECK(r.rhs == BraidWord(2 * g + 2, {{j, 1}, {i, 1}, {j, 1}}));
            } else {
                CHECK(r.lhs == BraidWord(2 * g + 2, {{i, 1}, {j, 1}}));
                CHECK(r.rhs == BraidWord(2 * g + 2, {{j, 1}, {i, 1}}));
            }
        }
    }
}

TEST_CASE("ArtinGraph invariants") {
    ArtinGraph g({1, 2});
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidInput);
    CHECK_THROWS_AS(g.add_edge(1, 3), InvalidInput);
    CHECK_THROWS_AS(g.add_vertex(2), InvalidInput);
    CHECK_THROWS_AS(g.add_vertex(0), InvalidInput);
    g.add_edge(2, 1);
    CHECK(g.multiplicity(1, 2) == 1);
    CHECK(g.multiplicity(2, 1) == 1);
}

TEST_CASE("h, hbar and the kernel words") {
    CHECK(h_word(1).to_string() == "t1 t2 t3");
    CHECK(hbar_word(1).to_string() == "t3 t2 t1");
    CHECK(h_word(2).to_string() == "t1 t2 t3 t4 t5");
    CHECK(h_word(2).strands() == 6);
    CHECK_THROWS_AS(h_word(0), InvalidInput);

    const auto k1 = kernel_generators(1);
    CHECK(k1.r2 == parse_word("t1 t2 t3", 4).power(4));
    CHECK(k1.r2.size() == 12);
    CHECK(deg(k1.r2) == 12);
    CHECK(deg(k1.r1) == 3);

    const auto k2 = kernel_generators(2);
    CHECK(deg(k2.r1) == 15);
    CHECK(deg(k2.r2) == 30);

    for (int g = 1; g <= 6; ++g) {
        const auto k = kernel_generators(g);
        CHECK(deg(k.r1) == (2 * g + 1) * (2 * g + 1) - (4 * g + 2));
        CHECK(deg(k.r1) == 4 * g * g - 1);
        CHECK(deg(k.r2) == (2 * g + 1) * (2 * g + 2));
        // r1 ends with the letter-by-letter inverse of h hbar
        CHECK(k.r1.size() == static_cast<std::size_t>((2 * g + 1) * (2 * g + 1) + 4 * g + 2));
        CHECK(k.r1.letters().back() == Letter{1, -1});
    }
}

TEST_CASE("Cochain1 is antisymmetric") {
    Cochain1 n;
    n.set(2, 1, 5);
    CHECK(n.at(1, 2) == -5);
    CHECK(n.at(2, 1) == 5);
    CHECK(n.at(3, 4) == 0);
    CHECK_THROWS_AS(Cochain1::from_oriented({{1, 2, 3}, {2, 1, 3}}), InvalidInput);
    CHECK(Cochain1::from_oriented({{1, 2, 3}, {2, 1, -3}}).at(1, 2) == 3);
}

TEST_CASE("solve_coboundary examples") {
    SUBCASE("path") {
        Cochain1 n;
        n.set(1, 2, 1);
        n.set(2, 3, -2);
        const Cochain0 m = solve_coboundary(path_graph(3), n);
        CHECK(m.at(1) == 0);
        CHECK(m.at(2) == 1);
        CHECK(m.at(3) == -1);
    }
    SUBCASE("zero cochain") {
        const Cochain0 m = solve_coboundary(path_graph(6), Cochain1{});
        for (const auto& [v, x] : m) CHECK(x == 0);
        CHECK(m.size() == 6);
    }
    SUBCASE("star") {
        ArtinGraph star({1, 2, 3, 4});  // centre 1 stands for vertex 0
        Cochain1 n;
        for (int k = 1; k <= 3; ++k) {
            star.add_edge(1, k + 1);
            n.set(1, k + 1, k);
        }
        const Cochain0 m = solve_coboundary(star, n);
        CHECK(m.at(1) == 0);
        CHECK(m.at(2) == 1);
        CHECK(m.at(3) == 2);
        CHECK(m.at(4) == 3);
        for (int k = 1; k <= 3; ++k) CHECK(m.at(k + 1) - m.at(1) == n.at(1, k + 1));
    }
    SUBCASE("forest roots every component at zero") {
        ArtinGraph f({5, 1, 2, 7});
        f.add_edge(5, 1);
        f.add_edge(2, 7);
        Cochain1 n;
        n.set(5, 1, 4);
        n.set(7, 2, 3);
        const Cochain0 m = solve_coboundary(f, n);
        CHECK(m.at(5) == 0);
        CHECK(m.at(1) == 4);
        CHECK(m.at(2) == 0);
        CHECK(m.at(7) == -3);
    }
}

TEST_CASE("solve_coboundary rejects unsupported graphs and bad cochains") {
    ArtinGraph triangle({1, 2, 3});
    triangle.add_edge(1, 2);
    triangle.add_edge(2, 3);
    triangle.add_edge(3, 1);
    CHECK_THROWS_AS(solve_coboundary(triangle, Cochain1{}), Unsupported);

    ArtinGraph doubled({1, 2});
    doubled.add_edge(1, 2, 2);
    CHECK_THROWS_AS(solve_coboundary(doubled, Cochain1{}), Unsupported);

    Cochain1 off_edge;
    off_edge.set(1, 3, 1);
    CHECK_THROWS_AS(solve_coboundary(path_graph(3), off_edge), InvalidInput);
}

TEST_CASE("solve_coboundary on random trees") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const int n_vertices = std::uniform_int_distribution<int>(1, 50)(rng);
        ArtinGraph tree;
        for (int v = 1; v <= n_vertices; ++v) tree.add_vertex(v);
        Cochain1 n;
        std::uniform_int_distribution<std::int64_t> value(-1000, 1000);
        for (int v = 2; v <= n_vertices; ++v) {
            const int parent = std::uniform_int_distribution<int>(1, v - 1)(rng);
            tree.add_edge(parent, v);
            n.set(v, parent, value(rng));
        }
        const Cochain0 m = solve_coboundary(tree, n);
        for (const auto& [e, k] : tree.edges()) {
            CHECK(m.at(e.second) - m.at(e.first) == n.at(e.first, e.second));
        }
        CHECK(coboundary(tree, m).values() == n.values());
    }
}
