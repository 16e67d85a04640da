#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppalg/dynkin.hpp"
#include "ppalg/errors.hpp"
#include "ppalg/quiver.hpp"

using namespace ppalg;

TEST_CASE("quiver construction rejects bad input") {
    Quiver q;
    q.add_vertex("x");
    CHECK_THROWS_AS(q.add_vertex("x"), validation_error);
    q.add_vertex("y");
    q.add_arrow("a", "x", "y");
    CHECK_THROWS_AS(q.add_arrow("a", "y", "x"), validation_error);
    CHECK_THROWS_AS(q.add_arrow("b", "x", "zzz"), validation_error);
    CHECK_THROWS_AS(q.add_arrow("c", "x", "y", 0), validation_error);
    CHECK(q.vertex_index("y") == 1);
    CHECK_THROWS_AS(q.vertex_index("w"), validation_error);
    CHECK(q.arrows_from(0) == std::vector<int>{0});
    CHECK(q.arrows_into(1) == std::vector<int>{0});
}

TEST_CASE("doubling adds one reverse arrow per arrow") {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    const DoubleQuiver d = DoubleQuiver::of(q);
    CHECK(d.total().arrow_count() == 2);
    CHECK(d.total().arrow(1).id == "a*");
    CHECK(d.total().arrow(1).src == 1);
    CHECK(d.total().arrow(1).tgt == 0);
    CHECK(d.star(0) == 1);
    CHECK(d.star(1) == 0);
    CHECK_FALSE(d.is_starred(0));
    CHECK(d.is_starred(1));
}

TEST_CASE("doubling refuses an id collision with an existing starred name") {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    q.add_arrow("a*", "2", "1");
    CHECK_THROWS_AS(DoubleQuiver::of(q), validation_error);
}

TEST_CASE("weights bind to the vertex set") {
    Quiver q;
    q.add_vertex("u");
    q.add_vertex("v");
    const Weight w = Weight::from_map(q, {{"u", Rational(1)}, {"v", Rational(-2)}});
    CHECK(w.at(0) == Rational(1));
    CHECK(w.at(1) == Rational(-2));
    CHECK_THROWS_AS(Weight::from_map(q, {{"u", Rational(1)}}), validation_error);
    CHECK(pairing(w, {3, 1}) == Rational(1));
    CHECK_THROWS_AS(pairing(w, {1, 2, 3}), validation_error);
}

TEST_CASE("catalog labels parse strictly") {
    CHECK(dynkin_catalog("A~2").quiver.vertex_count() == 3);
    CHECK(dynkin_catalog("D~4").quiver.vertex_count() == 5);
    CHECK(dynkin_catalog("E~6").quiver.vertex_count() == 7);
    CHECK(dynkin_catalog("E~7").quiver.vertex_count() == 8);
    CHECK(dynkin_catalog("E~8").quiver.vertex_count() == 9);
    CHECK_THROWS_AS(dynkin_catalog("A~0"), validation_error);
    CHECK_THROWS_AS(dynkin_catalog("D~3"), validation_error);
    CHECK_THROWS_AS(dynkin_catalog("E~9"), validation_error);
    CHECK_THROWS_AS(dynkin_catalog("B~2"), validation_error);
    CHECK_THROWS_AS(dynkin_catalog("A2"), validation_error);
    CHECK_THROWS_AS(dynkin_catalog("A~2x"), validation_error);
}

TEST_CASE("catalog deltas satisfy the harmonic identity") {
    // 2 delta_i = sum of delta over neighbours, for every catalog entry.
    for (const std::string label :
         {"A~1", "A~2", "A~5", "D~4", "D~5", "D~8", "E~6", "E~7", "E~8"}) {
        const DynkinModel m = dynkin_catalog(label);
        std::vector<long> nbr(m.quiver.vertex_count(), 0);
        for (const Arrow& a : m.quiver.arrows()) {
            nbr[a.src] += m.delta[a.tgt];
            nbr[a.tgt] += m.delta[a.src];
        }
        for (int v = 0; v < m.quiver.vertex_count(); ++v) {
            CAPTURE(label);
            CHECK(2 * m.delta[v] == nbr[v]);
        }
        CHECK(m.delta[m.extending] == 1);
    }
}

TEST_CASE("catalog delta values") {
    CHECK(dynkin_catalog("A~3").delta == std::vector<long>{1, 1, 1, 1});
    CHECK(dynkin_catalog("D~4").delta == std::vector<long>{1, 1, 2, 1, 1});
    CHECK(dynkin_catalog("D~6").delta == std::vector<long>{1, 1, 2, 2, 2, 1, 1});
    CHECK(dynkin_catalog("E~6").delta == std::vector<long>{1, 2, 3, 2, 1, 2, 1});
    CHECK(dynkin_catalog("E~7").delta == std::vector<long>{1, 2, 3, 4, 3, 2, 1, 2});
    CHECK(dynkin_catalog("E~8").delta == std::vector<long>{1, 2, 3, 4, 5, 6, 4, 2, 3});
    CHECK(dynkin_catalog("D~4").center_vertex() == 2);
    CHECK(dynkin_catalog("E~6").center_vertex() == 2);
    CHECK(dynkin_catalog("E~8").center_vertex() == 5);
    CHECK_FALSE(dynkin_catalog("A~2").center_vertex().has_value());
    CHECK_FALSE(dynkin_catalog("D~5").center_vertex().has_value());
}

TEST_CASE("star quiver shape and validation") {
    const Quiver s = star_quiver({2, 2, 2});
    CHECK(s.vertex_count() == 4);
    CHECK(s.arrow_count() == 3);
    CHECK(s.arrow(s.arrow_index("a1.1")).tgt == s.vertex_index("c"));
    const Quiver s2 = star_quiver({3, 4});
    CHECK(s2.vertex_count() == 6);
    CHECK(s2.arrow(s2.arrow_index("a2.3")).src == s2.vertex_index("2.3"));
    CHECK(s2.arrow(s2.arrow_index("a2.3")).tgt == s2.vertex_index("2.2"));
    CHECK_THROWS_AS(star_quiver({}), validation_error);
    CHECK_THROWS_AS(star_quiver({2, 1}), validation_error);
}

TEST_CASE("star quivers match the expected diagrams") {
    auto shape_matches = [](const Quiver& a, const Quiver& b) {
        return find_graph_isomorphism(underlying_graph(a), underlying_graph(b)).has_value();
    };
    CHECK(shape_matches(star_quiver({2, 2, 2, 2}), dynkin_catalog("D~4").quiver));
    CHECK(shape_matches(star_quiver({3, 3, 3}), dynkin_catalog("E~6").quiver));
    CHECK(shape_matches(star_quiver({2, 4, 4}), dynkin_catalog("E~7").quiver));
    CHECK(shape_matches(star_quiver({2, 3, 6}), dynkin_catalog("E~8").quiver));
    CHECK_FALSE(shape_matches(star_quiver({2, 2, 2}), dynkin_catalog("D~4").quiver));
    // Two arms of degree 2 plus one long arm give the finite D-shape: a path
    // with one fork, not an extended diagram.
    Quiver d5;
    for (int v = 0; v < 5; ++v) d5.add_vertex(std::to_string(v));
    d5.add_arrow("p", "0", "2");
    d5.add_arrow("q", "1", "2");
    d5.add_arrow("r", "2", "3");
    d5.add_arrow("s", "3", "4");
    CHECK(shape_matches(star_quiver({2, 2, 3}), d5));
}

TEST_CASE("star instance weights follow the root differences") {
    // Arms (0,1) four times, mu = 2: the classic crossing-weight example.
    const std::vector<Rational> arm = {Rational(0), Rational(1)};
    const StarInstance inst = star_instance({arm, arm, arm, arm}, Rational(2));
    CHECK(inst.quiver.vertex_count() == 5);
    CHECK(inst.weight.at(inst.quiver.vertex_index("c")) == Rational(2));
    for (int i = 1; i <= 4; ++i)
        CHECK(inst.weight.at(inst.quiver.vertex_index(std::to_string(i) + ".1")) == Rational(-1));
    // Pairing with the deltas of the matched extended diagram vanishes here.
    const DynkinModel d4 = dynkin_catalog("D~4");
    LabeledGraph a = underlying_graph(inst.quiver);
    LabeledGraph b = underlying_graph(d4.quiver);
    const auto iso = find_graph_isomorphism(a, b);
    REQUIRE(iso.has_value());
    std::vector<long> delta_through_iso(inst.quiver.vertex_count());
    for (int v = 0; v < inst.quiver.vertex_count(); ++v)
        delta_through_iso[v] = d4.delta[(*iso)[v]];
    CHECK(pairing(inst.weight, delta_through_iso) == Rational(0));
}

TEST_CASE("star instance telescoping sums") {
    // Within one arm the weights telescope to minus the last root.
    const std::vector<Rational> roots = {Rational(0), Rational(3), Rational(1, 2), Rational(-4)};
    const StarInstance inst = star_instance({roots}, Rational(7));
    Rational sum;
    for (int j = 1; j <= 3; ++j)
        sum += inst.weight.at(inst.quiver.vertex_index("1." + std::to_string(j)));
    CHECK(sum == -roots.back());
    CHECK_THROWS_AS(star_instance({{Rational(1), Rational(2)}}, Rational(0)), validation_error);
    CHECK_THROWS_AS(star_instance({{Rational(0)}}, Rational(0)), validation_error);
}

TEST_CASE("chain quiver") {
    const Quiver c = chain_quiver(4);
    CHECK(c.vertex_count() == 4);
    CHECK(c.arrow_count() == 3);
    CHECK(c.arrow(c.arrow_index("a2")).src == c.vertex_index("2"));
    CHECK(c.arrow(c.arrow_index("a2")).tgt == c.vertex_index("3"));
    CHECK(chain_quiver(1).arrow_count() == 0);
    CHECK_THROWS_AS(chain_quiver(0), validation_error);
}

TEST_CASE("graph isomorphism respects labels and roots") {
    Quiver p3a;
    p3a.add_vertex("x");
    p3a.add_vertex("y");
    p3a.add_vertex("z");
    p3a.add_arrow("a", "x", "y");
    p3a.add_arrow("b", "y", "z");
    Quiver p3b;
    p3b.add_vertex("u");
    p3b.add_vertex("v");
    p3b.add_vertex("w");
    p3b.add_arrow("a", "v", "u");
    p3b.add_arrow("b", "v", "w");
    LabeledGraph ga = underlying_graph(p3a);
    LabeledGraph gb = underlying_graph(p3b);
    CHECK(find_graph_isomorphism(ga, gb).has_value());

    // Pinning the root to an endpoint vs the middle must fail.
    ga.root = 0;
    gb.root = 1;
    CHECK_FALSE(find_graph_isomorphism(ga, gb).has_value());
    gb.root = 0;
    CHECK(find_graph_isomorphism(ga, gb).has_value());

    // Labels separating the endpoints force the map.
    ga.root = -1;
    gb.root = -1;
    ga.label = {5, 1, 7};
    gb.label = {1, 5, 7};
    CHECK_FALSE(find_graph_isomorphism(ga, gb).has_value());
    gb.label = {7, 1, 5};
    const auto iso = find_graph_isomorphism(ga, gb);
    REQUIRE(iso.has_value());
    CHECK((*iso)[0] == 2);
    CHECK((*iso)[2] == 0);
}
