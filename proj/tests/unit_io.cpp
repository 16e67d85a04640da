#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "ppalg/cache.hpp"
#include "ppalg/dynkin.hpp"
#include "ppalg/errors.hpp"
#include "ppalg/json_io.hpp"
#include "ppalg/truncation.hpp"

using namespace ppalg;
namespace fs = std::filesystem;

namespace {

TruncatedQuotient sample_quotient(const Weight& lambda, int max_degree = 6) {
    const DoubleQuiver d = DoubleQuiver::of(dynkin_catalog("A~2").quiver);
    TruncatedQuotient::Options opt;
    opt.max_degree = max_degree;
    return TruncatedQuotient::preprojective(d, lambda, opt);
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "ppalg-io-test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("rational and cyclotomic values round-trip through json") {
    for (const char* text : {"0", "7", "-3", "22/7", "-5/9"}) {
        const Rational r = Rational::parse(text);
        const json j = json_of(r);
        CHECK(j.get<std::string>() == text);
        CHECK(rational_from_json(j) == r);
    }
    CHECK_THROWS_AS(rational_from_json(json(3)), validation_error);

    const Cyclotomic z = Cyclotomic::zeta(5) + Cyclotomic(Rational(1, 2));
    const json j = json_of(z);
    CHECK(j["m"] == 5);
    CHECK(j["coeffs"].size() == 4);
    CHECK(cyclotomic_from_json(j) == z);
}

TEST_CASE("quivers, weights and elements round-trip through json") {
    const Quiver q = dynkin_catalog("D~4").quiver;
    const json qj = json_of(q);
    const Quiver back = quiver_from_json(qj);
    CHECK(json_of(back) == qj);
    CHECK(back.vertex_count() == 5);
    CHECK(back.arrow_count() == 4);
    CHECK(back.vertex_ids() == q.vertex_ids());

    const Weight w = Weight::from_map(
        q, {{"0", Rational(1)}, {"1", Rational(-1, 2)}, {"2", Rational(0)},
            {"3", Rational(3)}, {"4", Rational(0)}});
    CHECK(weight_from_json(q, json_of(q, w)).values() == w.values());
    CHECK_THROWS_AS(weight_from_json(q, json{{"0", "1"}}), validation_error);

    const DoubleQuiver d = DoubleQuiver::of(q);
    const Quiver& total = d.total();
    Element x = Element::path_term(Path::from_arrows(total, {0, d.star(0)}));
    x.add_term(Path::trivial(2), Rational(-7, 2));
    const json xj = json_of(total, x);
    CHECK(element_from_json(total, xj) == x);
    CHECK(json_of(total, element_from_json(total, xj)) == xj);
    CHECK(json_of(total, Element()) == json::array());

    // Weighted arrows only serialize a weight field when it is not 1.
    Quiver loops;
    loops.add_vertex("c");
    loops.add_arrow("x", "c", "c", 2);
    const json lj = json_of(loops);
    CHECK(lj["arrows"][0]["weight"] == 2);
    CHECK(quiver_from_json(lj).arrow(0).weight == 2);
    CHECK_FALSE(json_of(q)["arrows"][0].contains("weight"));
}

TEST_CASE("dimension tables serialize layer by layer under vertex ids") {
    const Quiver q = dynkin_catalog("A~1").quiver;
    const TruncatedQuotient t = sample_quotient(Weight::zero(dynkin_catalog("A~2").quiver));
    const Quiver& a2 = t.quiver();
    const json j = json_of(a2, t.dimension_table());
    CHECK(j["max_degree"] == 6);
    CHECK(j["layers"]["0"]["0"][0] == 1);
    CHECK(j["layers"]["0"]["1"][0] == 0);
    CHECK(j["layers"]["0"]["0"].size() == 7);
    (void)q;
}

TEST_CASE("quotient snapshots restore bit-exactly") {
    const Quiver q = dynkin_catalog("A~2").quiver;
    const Weight lambda =
        Weight::from_map(q, {{"0", Rational(1)}, {"1", Rational(1)}, {"2", Rational(-2)}});
    const TruncatedQuotient t = sample_quotient(lambda);
    const json snap = quotient_to_json(t);
    const TruncatedQuotient back = quotient_from_json(snap);

    CHECK(back.max_degree() == t.max_degree());
    CHECK(back.rule_count() == t.rule_count());
    CHECK(back.dimension_table() == t.dimension_table());
    CHECK(back.weight().has_value());
    CHECK(back.weight()->values() == lambda.values());
    CHECK(quotient_to_json(back) == snap);
    for (int i = 0; i < 3; ++i)
        for (int j2 = 0; j2 < 3; ++j2)
            CHECK(back.standard_paths(i, j2) == t.standard_paths(i, j2));
}

TEST_CASE("restore refuses malformed rule tables") {
    const TruncatedQuotient t = sample_quotient(Weight::zero(dynkin_catalog("A~2").quiver));
    json snap = quotient_to_json(t);
    REQUIRE(!snap["rules"].empty());

    // A rule whose tail repeats its own head violates the order invariant.
    json bad = snap;
    bad["rules"][0]["normal"] = json::array(
        {json{{"path", bad["rules"][0]["head"]}, {"coeff", "1"}}});
    CHECK_THROWS_AS(quotient_from_json(bad), validation_error);

    json dup = snap;
    dup["rules"].push_back(dup["rules"][0]);
    CHECK_THROWS_AS(quotient_from_json(dup), validation_error);
}

TEST_CASE("the preprojective cache round-trips, verifies and rejects corruption") {
    TempDir dir;
    const Quiver q = dynkin_catalog("A~1").quiver;
    const DoubleQuiver d = DoubleQuiver::of(q);
    const Weight zero = Weight::zero(q);
    TruncatedQuotient::Options opt;
    opt.max_degree = 4;

    const CacheOutcome first = cached_preprojective(dir.path.string(), d, zero, opt);
    CHECK_FALSE(first.hit);
    CHECK(fs::exists(first.file));

    const CacheOutcome second = cached_preprojective(dir.path.string(), d, zero, opt, true);
    CHECK(second.hit);
    CHECK(second.verified);
    CHECK(second.quotient.dimension_table() == first.quotient.dimension_table());

    // One flipped byte invalidates the checksum and forces a rebuild.
    std::string text;
    {
        std::ifstream in(first.file);
        std::getline(in, text, '\0');
    }
    const auto pos = text.find("\"rules\"");
    REQUIRE(pos != std::string::npos);
    text[pos + 1] = 'q';
    {
        std::ofstream out(first.file);
        out << text;
    }
    const CacheOutcome rebuilt = cached_preprojective(dir.path.string(), d, zero, opt);
    CHECK_FALSE(rebuilt.hit);
    CHECK(rebuilt.quotient.dimension_table() == first.quotient.dimension_table());

    // A valid entry filed under the wrong key is a miss, not a wrong answer.
    const Weight other = Weight::from_map(q, {{"0", Rational(1)}, {"1", Rational(-1)}});
    const CacheOutcome deformed = cached_preprojective(dir.path.string(), d, other, opt);
    CHECK_FALSE(deformed.hit);
    fs::copy_file(deformed.file, first.file, fs::copy_options::overwrite_existing);
    const CacheOutcome healed = cached_preprojective(dir.path.string(), d, zero, opt);
    CHECK_FALSE(healed.hit);
    CHECK(healed.quotient.weight()->values() == zero.values());

    // The key separates both the weight and the monomial order.
    TruncatedQuotient::Options reversed = opt;
    reversed.reverse_arrow_order = true;
    CHECK(cache_key(d, zero, opt) != cache_key(d, zero, reversed));
    CHECK(cache_key(d, zero, opt) != cache_key(d, other, opt));
}

TEST_CASE("fnv-1a matches the reference vectors") {
    CHECK(fnv1a("") == 14695981039346656037ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
    CHECK(hex64(0) == "0000000000000000");
    CHECK(hex64(0xdeadbeefcafe1234ull) == "deadbeefcafe1234");
}
