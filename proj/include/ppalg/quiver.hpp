#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppalg/rational.hpp"

namespace ppalg {

// Arrow between vertex indices.  The degree weight is 1 for ordinary quiver
// arrows; presentations that encode one generator as a composite (e.g. a
// loop standing for a length-two cycle) use larger weights.
struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;
    int weight = 1;
};

// Finite quiver with string-labelled vertices and arrows.  Vertex and arrow
// ids are unique; indices are assigned in insertion order and are the stable
// handles used everywhere else.
class Quiver {
public:
    int add_vertex(const std::string& id);
    int add_arrow(const std::string& id, const std::string& src, const std::string& tgt,
                  int weight = 1);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_id(int v) const { return vertices_.at(v); }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    // Index lookups; the checked forms throw validation_error.
    std::optional<int> find_vertex(const std::string& id) const;
    std::optional<int> find_arrow(const std::string& id) const;
    int vertex_index(const std::string& id) const;
    int arrow_index(const std::string& id) const;

    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_into(int v) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> arrow_index_;
};

// Double of a quiver: every base arrow a gets a reverse partner a*.  The
// total quiver lists base arrows first (same indices as the base), then the
// starred ones, so arrow k* has index k + base_arrow_count().
class DoubleQuiver {
public:
    static DoubleQuiver of(const Quiver& base);

    const Quiver& total() const { return total_; }
    const Quiver& base() const { return base_; }
    int base_arrow_count() const { return base_.arrow_count(); }

    bool is_starred(int arrow) const { return arrow >= base_.arrow_count(); }
    // The involution a <-> a* on total-quiver arrow indices.
    int star(int arrow) const;

private:
    Quiver base_;
    Quiver total_;
};

// Rational weight vector indexed by the vertices of a fixed quiver.
class Weight {
public:
    Weight() = default;
    static Weight zero(const Quiver& q);
    static Weight constant(const Quiver& q, const Rational& c);
    // Requires the map's key set to be exactly the quiver's vertex set.
    static Weight from_map(const Quiver& q, const std::map<std::string, Rational>& values);
    static Weight from_values(const Quiver& q, std::vector<Rational> values);

    int size() const { return static_cast<int>(values_.size()); }
    const Rational& at(int v) const { return values_.at(v); }
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.values_ == b.values_; }

private:
    std::vector<Rational> values_;
};

// Sum of weight[v] * multiplicity[v]; vector lengths must match.
Rational pairing(const Weight& w, const std::vector<long>& multiplicity);

} // namespace ppalg
