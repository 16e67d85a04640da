#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppalg/dynkin.hpp"
#include "ppalg/truncation.hpp"
#include "support/brute.hpp"

using namespace ppalg;

namespace {

DoubleQuiver single_arrow() {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    return DoubleQuiver::of(q);
}

// Compares the engine's standard paths, block by block, against the brute
// reference on the same relations.
void check_against_brute(const Quiver& q, const std::vector<Element>& relations, int N) {
    TruncatedQuotient::Options opt;
    opt.max_degree = N;
    const TruncatedQuotient t = TruncatedQuotient::build(q, relations, opt);
    const brute::BruteTruncation ref = brute::brute_truncation(q, relations, N);
    CHECK(t.dimension_table() == ref.table);
    for (int s = 0; s < q.vertex_count(); ++s)
        for (int v = 0; v < q.vertex_count(); ++v) {
            auto it = ref.standard.find({s, v});
            const std::vector<Path> expect =
                it == ref.standard.end() ? std::vector<Path>{} : it->second;
            CHECK(t.standard_paths(s, v) == expect);
        }
}

} // namespace

TEST_CASE("single arrow at weight zero, degree two") {
    const DoubleQuiver d = single_arrow();
    const Quiver& q = d.total();
    TruncatedQuotient::Options opt;
    opt.max_degree = 2;
    const TruncatedQuotient t =
        TruncatedQuotient::preprojective(d, Weight::zero(q), opt);
    // The ideal contains both vertex components of the relation, so both
    // cycles vanish and the quotient is spanned by e_1, e_2, a, a*.
    CHECK(t.dimension_table().total() == 4);
    CHECK(t.rule_count() == 2);
    const Path aa = Path::from_arrows(q, {1, 0});
    const Path astar_a = Path::from_arrows(q, {0, 1});
    CHECK(t.normal_form(Element::path_term(aa)).is_zero());
    CHECK(t.normal_form(Element::path_term(astar_a)).is_zero());
    CHECK(t.standard_paths(0, 1) == std::vector<Path>{Path::from_arrows(q, {0})});
    // (a + a*)^2 lands in the span of the two dead cycles.
    const Element s = Element::path_term(Path::from_arrows(q, {0})) +
                      Element::path_term(Path::from_arrows(q, {1}));
    CHECK(t.multiply(s, s).is_zero());
}

TEST_CASE("single arrow against brute reference") {
    const DoubleQuiver d = single_arrow();
    const Quiver& q = d.total();
    for (const auto& lambda :
         {Weight::zero(q), Weight::from_map(q, {{"1", Rational(1)}, {"2", Rational(-1)}}),
          Weight::from_map(q, {{"1", Rational(2, 3)}, {"2", Rational(5)}})}) {
        check_against_brute(q, preprojective_relation_components(d, lambda), 4);
    }
}

TEST_CASE("affine A1 against brute reference") {
    const DynkinModel m = dynkin_catalog("A~1");
    const DoubleQuiver d = DoubleQuiver::of(m.quiver);
    const Quiver& q = d.total();
    for (const auto& lambda :
         {Weight::zero(q), Weight::from_map(q, {{"0", Rational(1)}, {"1", Rational(-1)}}),
          Weight::from_map(q, {{"0", Rational(1, 2)}, {"1", Rational(7)}})}) {
        check_against_brute(q, preprojective_relation_components(d, lambda), 4);
    }
}

TEST_CASE("affine A2 against brute reference") {
    const DynkinModel m = dynkin_catalog("A~2");
    const DoubleQuiver d = DoubleQuiver::of(m.quiver);
    const Quiver& q = d.total();
    const Weight on_plane =
        Weight::from_map(q, {{"0", Rational(2)}, {"1", Rational(-1)}, {"2", Rational(-1)}});
    const Weight off_plane =
        Weight::from_map(q, {{"0", Rational(1)}, {"1", Rational(1)}, {"2", Rational(1)}});
    for (const auto& lambda : {Weight::zero(q), on_plane, off_plane})
        check_against_brute(q, preprojective_relation_components(d, lambda), 4);
}

TEST_CASE("affine D4 against brute reference") {
    const DynkinModel m = dynkin_catalog("D~4");
    const DoubleQuiver d = DoubleQuiver::of(m.quiver);
    const Quiver& q = d.total();
    const Weight lambda = Weight::from_map(q, {{"0", Rational(1)},
                                               {"1", Rational(1)},
                                               {"2", Rational(-2)},
                                               {"3", Rational(1)},
                                               {"4", Rational(1)}});
    check_against_brute(q, preprojective_relation_components(d, Weight::zero(q)), 3);
    check_against_brute(q, preprojective_relation_components(d, lambda), 3);
}

TEST_CASE("weighted loops model a one-vertex presentation") {
    // One vertex, loops x and y of degree 2, relations x^2 = x, x + y = 3 e.
    Quiver q;
    q.add_vertex("c");
    q.add_arrow("x", "c", "c", 2);
    q.add_arrow("y", "c", "c", 2);
    const Path x = Path::from_arrows(q, {0});
    const Path xx = Path::from_arrows(q, {0, 0});
    const Path y = Path::from_arrows(q, {1});
    const Element rel1 = Element::path_term(xx) - Element::path_term(x);
    const Element rel2 =
        Element::path_term(x) + Element::path_term(y) - Rational(3) * Element::vertex_unit(0);
    check_against_brute(q, {rel1, rel2}, 8);

    TruncatedQuotient::Options opt;
    opt.max_degree = 8;
    const TruncatedQuotient t = TruncatedQuotient::build(q, {rel1, rel2}, opt);
    // The quotient is spanned by e and x: dimension 2 in the window.
    CHECK(t.dimension_table().total() == 2);
    // y reduces to 3e - x, and y^2 to 9e - 5x.
    const Element nf_y = t.normal_form(Element::path_term(y));
    CHECK(nf_y == Rational(3) * Element::vertex_unit(0) - Element::path_term(x));
    const Element yy = t.multiply(Element::path_term(y), Element::path_term(y));
    CHECK(yy == Rational(9) * Element::vertex_unit(0) - Rational(5) * Element::path_term(x));
}

TEST_CASE("reversed arrow precedence changes rules but not dimensions") {
    const DynkinModel m = dynkin_catalog("A~1");
    const DoubleQuiver d = DoubleQuiver::of(m.quiver);
    const Quiver& q = d.total();
    const Weight lambda = Weight::from_map(q, {{"0", Rational(2)}, {"1", Rational(-2)}});
    TruncatedQuotient::Options fwd;
    fwd.max_degree = 4;
    TruncatedQuotient::Options rev = fwd;
    rev.reverse_arrow_order = true;
    const TruncatedQuotient tf = TruncatedQuotient::preprojective(d, lambda, fwd);
    const TruncatedQuotient tr = TruncatedQuotient::preprojective(d, lambda, rev);
    CHECK(tf.dimension_table() == tr.dimension_table());
    CHECK(tf.rule_count() == tr.rule_count());
    // The rewrite tables themselves differ under the two precedences.
    CHECK(tf.export_rules() != tr.export_rules());
}

TEST_CASE("weight independence of dimension tables") {
    const DynkinModel m = dynkin_catalog("A~2");
    const DoubleQuiver d = DoubleQuiver::of(m.quiver);
    const Quiver& q = d.total();
    TruncatedQuotient::Options opt;
    opt.max_degree = 5;
    const WeightSweepReport report = lambda_independence_check(
        d,
        {Weight::zero(q),
         Weight::from_map(q, {{"0", Rational(1)}, {"1", Rational(1)}, {"2", Rational(1)}}),
         Weight::from_map(q, {{"0", Rational(1, 2)}, {"1", Rational(-1, 3)}, {"2", Rational(7)}})},
        opt);
    CHECK(report.all_equal);
    CHECK(report.tables.size() == 3);
}

TEST_CASE("degree overflow and budget errors") {
    const DoubleQuiver d = single_arrow();
    const Quiver& q = d.total();
    TruncatedQuotient::Options opt;
    opt.max_degree = 2;
    const TruncatedQuotient t = TruncatedQuotient::preprojective(d, Weight::zero(q), opt);
    const Element a = Element::path_term(Path::from_arrows(q, {0}));
    const Element cyc = Element::path_term(Path::from_arrows(q, {0, 1}));
    CHECK_THROWS_AS(t.multiply(cyc, a), degree_overflow);
    CHECK_THROWS_AS(t.normal_form(Element::path_term(Path::from_arrows(q, {0, 1, 0}))),
                    degree_overflow);

    TruncatedQuotient::Options tiny;
    tiny.max_degree = 6;
    tiny.max_paths = 4;
    CHECK_THROWS_AS(TruncatedQuotient::preprojective(d, Weight::zero(q), tiny), resource_limit);

    TruncatedQuotient::Options shallow;
    shallow.max_degree = 1;
    CHECK_THROWS_AS(TruncatedQuotient::preprojective(d, Weight::zero(q), shallow),
                    validation_error);
}

TEST_CASE("corner algebra exposes filtered bases") {
    const DynkinModel m = dynkin_catalog("A~1");
    const DoubleQuiver d = DoubleQuiver::of(m.quiver);
    const Quiver& q = d.total();
    TruncatedQuotient::Options opt;
    opt.max_degree = 6;
    const TruncatedQuotient t = TruncatedQuotient::preprojective(d, Weight::zero(q), opt);
    const CornerAlgebra c = t.corner(0);
    // Cycles at the extending vertex: dimension d+1 in even degree d.
    CHECK(c.dim_layer(0) == 1);
    CHECK(c.dim_layer(1) == 0);
    CHECK(c.dim_layer(2) == 3);
    CHECK(c.dim_layer(3) == 0);
    CHECK(c.dim_layer(4) == 5);
    CHECK(c.dim_layer(6) == 7);
    CHECK(c.dim_filtered(6) == 16);
    CHECK(c.basis_up_to(2).size() == 4);
    // Coordinates round-trip.
    std::vector<Rational> coords(c.basis().size());
    coords[0] = Rational(2);
    coords[3] = Rational(-1, 3);
    const Element e = c.from_coordinates(coords);
    CHECK(c.coordinates(e) == coords);
    // Elements off the corner are rejected.
    CHECK_THROWS_AS(c.coordinates(Element::path_term(Path::from_arrows(q, {0}))),
                    validation_error);
}

TEST_CASE("rule export and restore round-trips") {
    const DynkinModel m = dynkin_catalog("A~1");
    const DoubleQuiver d = DoubleQuiver::of(m.quiver);
    const Quiver& q = d.total();
    const Weight lambda = Weight::from_map(q, {{"0", Rational(1)}, {"1", Rational(-1)}});
    TruncatedQuotient::Options opt;
    opt.max_degree = 4;
    const TruncatedQuotient t = TruncatedQuotient::preprojective(d, lambda, opt);
    const auto rules = t.export_rules();
    const TruncatedQuotient restored = TruncatedQuotient::restore(q, opt, lambda, rules);
    CHECK(restored.dimension_table() == t.dimension_table());
    CHECK(restored.export_rules() == rules);
    const Element probe = Element::path_term(Path::from_arrows(q, {0, 1, 0, 1}));
    CHECK(restored.normal_form(probe) == t.normal_form(probe));

    // Tampered tables are rejected: swap a head into some other rule's tail.
    auto bad = rules;
    bool tampered = false;
    for (auto& [head, nf] : bad) {
        if (nf.is_zero()) continue;
        nf += Element::path_term(bad.front().first, Rational(1));
        tampered = true;
        break;
    }
    if (tampered) {
        CHECK_THROWS_AS(TruncatedQuotient::restore(q, opt, lambda, bad), validation_error);
    }
}

TEST_CASE("restore rejects heads above the degree bound") {
    const DoubleQuiver d = single_arrow();
    const Quiver& q = d.total();
    TruncatedQuotient::Options opt;
    opt.max_degree = 2;
    const Path big = Path::from_arrows(q, {0, 1, 0});
    CHECK_THROWS_AS(
        TruncatedQuotient::restore(q, opt, std::nullopt, {{big, Element::zero()}}),
        validation_error);
}
