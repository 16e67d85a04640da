#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppalg/quiver.hpp"

namespace ppalg {

// Path in a quiver.  Arrows are stored in application order: arrows()[0]
// acts first.  Composition is read right to left, so in a displayed word
// "b a" the arrow a acts first and the path runs source(a) -> ... -> target(b).
// The degree is the sum of arrow weights (the length when all weights are 1).
class Path {
public:
    static Path trivial(int vertex) { return Path(vertex, vertex, 0, {}); }
    // Validates that consecutive arrows compose; throws validation_error.
    static Path from_arrows(const Quiver& q, const std::vector<int>& arrows_in_application_order);

    int source() const { return src_; }
    int target() const { return tgt_; }
    int length() const { return static_cast<int>(arrows_.size()); }
    int degree() const { return degree_; }
    bool is_trivial() const { return arrows_.empty(); }
    const std::vector<std::int32_t>& arrows() const { return arrows_; }

    // Extension by one arrow on either side; nullopt when endpoints clash.
    std::optional<Path> after(const Quiver& q, int arrow) const;  // arrow acts first
    std::optional<Path> before(const Quiver& q, int arrow) const; // arrow acts last

    // Degree, then length, then the arrow sequence lexicographically, then
    // the source vertex (which only differs for trivial paths).
    std::strong_ordering operator<=>(const Path& o) const;
    bool operator==(const Path& o) const {
        return src_ == o.src_ && arrows_ == o.arrows_;
    }

    // Word form, rightmost arrow acting first; "e_v" for trivial paths.
    std::string str(const Quiver& q) const;

    friend std::optional<Path> concat(const Path& p, const Path& q);

private:
    Path(int src, int tgt, int degree, std::vector<std::int32_t> arrows)
        : src_(src), tgt_(tgt), degree_(degree), arrows_(std::move(arrows)) {}

    int src_;
    int tgt_;
    int degree_;
    std::vector<std::int32_t> arrows_;
};

// p . q, with q acting first; nullopt when target(q) != source(p).
std::optional<Path> concat(const Path& p, const Path& q);

// Finite rational linear combination of paths of a fixed quiver.
class Element {
public:
    Element() = default;
    static Element zero() { return {}; }
    static Element path_term(const Path& p, const Rational& c = Rational(1));
    static Element vertex_unit(int v) { return path_term(Path::trivial(v)); }
    // Sum of all trivial paths.
    static Element unit(const Quiver& q);

    bool is_zero() const { return terms_.empty(); }
    // Largest path degree appearing; 0 for the zero element.
    int degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Path, Rational>& terms() const { return terms_; }
    Rational coefficient(const Path& p) const;

    void add_term(const Path& p, const Rational& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rational& c, Element e);

    // Bilinear extension of path composition (right factor acts first).
    Element mul(const Element& o) const;

    // Projection onto paths from src to tgt.
    Element corner(int src, int tgt) const;
    // Projection onto paths of exact degree d.
    Element homogeneous_part(int d) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    std::string str(const Quiver& q) const;

private:
    std::map<Path, Rational> terms_;
};

// Moment-map relation sum([a, a*]) - sum(lambda_v e_v) over the double
// quiver, as an element of the total path algebra.
Element preprojective_relation(const DoubleQuiver& dq, const Weight& lambda);

// Its vertex components e_v r e_v, indexed by vertex; they sum to the full
// relation.
std::vector<Element> preprojective_relation_components(const DoubleQuiver& dq,
                                                       const Weight& lambda);

} // namespace ppalg
