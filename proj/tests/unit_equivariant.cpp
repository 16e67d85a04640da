#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppalg/equivariant.hpp"
#include "ppalg/errors.hpp"
#include "ppalg/groups.hpp"
#include "ppalg/truncation.hpp"

using namespace ppalg;

TEST_CASE("weight monomial basics") {
    CHECK(WeightMonomial{2, 1}.str() == "u^2 v");
    CHECK(WeightMonomial{0, 0}.str() == "1");
    CHECK(WeightMonomial{1, 3}.str() == "u v^3");
    CHECK(WeightMonomial{2, 3}.eval(Rational(2), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("monomial bases of the weight spaces") {
    const CyclicEquivariantModel m2(2);
    const auto b = m2.basis(0, 0, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == WeightMonomial{2, 0});
    CHECK(b[1] == WeightMonomial{1, 1});
    CHECK(b[2] == WeightMonomial{0, 2});

    for (int i = 0; i < 2; ++i) {
        const auto unit = m2.basis(i, i, 0);
        REQUIRE(unit.size() == 1);
        CHECK(unit[0] == WeightMonomial{0, 0});
    }

    const CyclicEquivariantModel m3(3);
    const auto down = m3.basis(1, 0, 1);
    REQUIRE(down.size() == 1);
    CHECK(down[0] == WeightMonomial{0, 1});

    CHECK_THROWS_AS(CyclicEquivariantModel(1), validation_error);
    CHECK_THROWS_AS(CyclicEquivariantModel(0), validation_error);
    CHECK_THROWS_AS(m3.basis(-1, 0, 2), validation_error);
    CHECK_THROWS_AS(m3.basis(0, 3, 2), validation_error);
    CHECK_THROWS_AS(m3.basis(0, 0, -1), validation_error);
}

TEST_CASE("model dimensions equal the character oracle") {
    for (int n = 2; n <= 6; ++n) {
        const CyclicEquivariantModel model(n);
        const GroupData g = GroupData::catalog(GroupFamily::cyclic, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int d = 0; d <= 8; ++d)
                    CHECK(model.dimension(i, j, d) == graded_dim_oracle(g, i, j, d));
    }
}

TEST_CASE("model dimensions equal the truncation engine at weight zero") {
    for (int n = 2; n <= 3; ++n) {
        const CyclicEquivariantModel model(n);
        TruncatedQuotient::Options opt;
        opt.max_degree = 6;
        const TruncatedQuotient t = TruncatedQuotient::preprojective(
            model.quiver(), Weight::zero(model.quiver().total()), opt);
        const DimensionTable table = t.dimension_table();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int d = 0; d <= 6; ++d)
                    CHECK(model.dimension(i, j, d) == table.at(i, j, d));
    }
}

TEST_CASE("tensor words and the moment identity") {
    const CyclicEquivariantModel m3(3);
    const Quiver& q = m3.quiver().total();
    // Arrows a0: 0->1, a1: 1->2, a2: 2->0; duals carry indices 3, 4, 5.
    const Path in_out = *concat(Path::from_arrows(q, {2}), Path::from_arrows(q, {5}));
    CHECK(m3.word(in_out) == "uv");
    const Path out_in = *concat(Path::from_arrows(q, {3}), Path::from_arrows(q, {0}));
    CHECK(m3.word(out_in) == "vu");
    CHECK(m3.word(Path::trivial(1)).empty());

    for (int n = 2; n <= 6; ++n) {
        const CyclicEquivariantModel model(n);
        for (int v = 0; v < n; ++v) CHECK(model.moment_defect(v).empty());
        CHECK(model.moment_identity_holds());
    }
}

TEST_CASE("pairing traces fix the normalization signs") {
    for (int n = 2; n <= 4; ++n) {
        const CyclicEquivariantModel model(n);
        const Quiver& q = model.quiver().total();
        for (int a = 0; a < model.quiver().base_arrow_count(); ++a) {
            const Path p = Path::from_arrows(q, {a});
            const Path ps = Path::from_arrows(q, {model.quiver().star(a)});
            CHECK(model.pairing_trace(p, ps) == Rational(1));
            CHECK(model.pairing_trace(ps, p) == Rational(-1));
        }
    }

    // Two u-letters pair to zero: around the 2-cycle both base arrows are
    // u-type and sit opposite each other.
    const CyclicEquivariantModel m2(2);
    const Quiver& q2 = m2.quiver().total();
    CHECK(m2.pairing_trace(Path::from_arrows(q2, {0}), Path::from_arrows(q2, {1})) ==
          Rational(0));
    CHECK_THROWS_AS(
        m2.pairing_trace(Path::from_arrows(q2, {0}), Path::from_arrows(q2, {0})),
        validation_error);
    CHECK_THROWS_AS(m2.pairing_trace(Path::trivial(0), Path::from_arrows(q2, {0})),
                    validation_error);
}

TEST_CASE("generic point evaluation spans the endomorphisms") {
    const auto at = [](int n, int v, long x1, long x2, int d) {
        return generic_point_evaluation(n, v, Rational(x1), Rational(x2), d);
    };

    const EvaluationSpan generic2 = at(2, 0, 1, 1, 2);
    CHECK(generic2.full);
    bool saw_one = false;
    for (const Rational& r : generic2.values) saw_one = saw_one || r == Rational(1);
    CHECK(saw_one);

    const EvaluationSpan origin = at(2, 0, 0, 0, 8);
    CHECK(!origin.full);
    for (const Rational& r : origin.values) CHECK(r.is_zero());

    for (int v = 0; v < 3; ++v) CHECK(at(3, v, 1, 2, 2).full);

    // A vanishing coordinate starves the invariant monomials until the
    // degree bound admits u^n.
    CHECK(!at(3, 0, 1, 0, 2).full);
    CHECK(at(3, 0, 1, 0, 3).full);
    CHECK_THROWS_AS(at(3, 3, 1, 1, 2), validation_error);
}
