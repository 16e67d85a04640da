#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ppalg/pathalg.hpp"

namespace ppalg {

// Dimensions of the degree-d layer of paths between each vertex pair in a
// truncated quotient, d = 0 .. max_degree.
class DimensionTable {
public:
    DimensionTable() = default;
    DimensionTable(int vertex_count, int max_degree)
        : nv_(vertex_count), maxdeg_(max_degree),
          data_(static_cast<std::size_t>(vertex_count) * vertex_count * (max_degree + 1)) {}

    int vertex_count() const { return nv_; }
    int max_degree() const { return maxdeg_; }

    long at(int src, int tgt, int degree) const { return data_[offset(src, tgt, degree)]; }
    long& at(int src, int tgt, int degree) { return data_[offset(src, tgt, degree)]; }
    long filtered(int src, int tgt, int through_degree) const;
    long total() const;

    struct Entry {
        int src = 0, tgt = 0, degree = 0;
        long left = 0, right = 0;
    };
    // First (src, tgt, degree) cell where the tables differ, if any; shape
    // mismatches report as entry {-1,-1,-1}.
    static std::optional<Entry> first_difference(const DimensionTable& a,
                                                 const DimensionTable& b);

    bool operator==(const DimensionTable&) const = default;

private:
    std::size_t offset(int src, int tgt, int degree) const {
        return (static_cast<std::size_t>(src) * nv_ + tgt) * (maxdeg_ + 1) + degree;
    }

    int nv_ = 0;
    int maxdeg_ = -1;
    std::vector<long> data_;
};

class CornerAlgebra;

// Truncated quotient of a path algebra by the two-sided ideal generated by
// the given relations, computed degree by degree up to a bound N.
//
// The construction keeps a reduced table of rewrite rules: each rule maps a
// path (the largest monomial of some ideal member under the order below) to
// its normal form, supported on standard paths.  Standard paths, the ones
// that are no rule's head, form a basis of the truncation.
//
// Monomial order: total degree, then length, then the arrow sequence
// lexicographically (optionally under reversed arrow precedence), then the
// source vertex.  The order is multiplicative, so the standard set is closed
// under subwords.
class TruncatedQuotient {
public:
    struct Options {
        int max_degree = 6;
        std::size_t max_paths = 200000;
        // Alternate monomial order for order-independence experiments.
        bool reverse_arrow_order = false;
    };

    TruncatedQuotient() = default;

    static TruncatedQuotient build(const Quiver& q, const std::vector<Element>& relations,
                                   const Options& opt);
    static TruncatedQuotient build(const Quiver& q, const std::vector<Element>& relations) {
        return build(q, relations, Options());
    }
    // Quotient of the doubled quiver by the moment-map relation at lambda.
    static TruncatedQuotient preprojective(const DoubleQuiver& dq, const Weight& lambda,
                                           const Options& opt);
    static TruncatedQuotient preprojective(const DoubleQuiver& dq, const Weight& lambda) {
        return preprojective(dq, lambda, Options());
    }

    bool valid() const { return impl_ != nullptr; }
    const Quiver& quiver() const;
    int max_degree() const;
    const Options& options() const;
    // Set by preprojective(), empty for general builds.
    const std::optional<Weight>& weight() const;

    // Reduction to the standard-path basis; degree_overflow past the bound.
    Element normal_form(const Element& x) const;
    bool is_zero_mod(const Element& x) const { return normal_form(x).is_zero(); }
    // Requires degree(x) + degree(y) <= max_degree.
    Element multiply(const Element& x, const Element& y) const;

    // Standard paths from src to tgt, ascending by degree then path order.
    const std::vector<Path>& standard_paths(int src, int tgt) const;
    DimensionTable dimension_table() const;
    CornerAlgebra corner(int vertex) const;

    std::size_t rule_count() const;
    // Deterministic tally of reduction work, suitable for reports.
    std::uint64_t work_counter() const;

    // Rule table as (head, normal form) pairs, ascending by head; together
    // with restore() this round-trips the quotient.
    std::vector<std::pair<Path, Element>> export_rules() const;
    // Rebuilds from a stored rule table, revalidating every rule; throws
    // validation_error on any inconsistency.
    static TruncatedQuotient restore(const Quiver& q, const Options& opt,
                                     std::optional<Weight> lambda,
                                     const std::vector<std::pair<Path, Element>>& rules);

private:
    struct Impl;
    // Never mutated after construction; shared so that corner algebras and
    // copies stay cheap.
    std::shared_ptr<Impl> impl_;
};

// Corner e_v T e_v of a truncated quotient: the cycles at one vertex under
// the quotient product.
class CornerAlgebra {
public:
    CornerAlgebra() = default;

    int vertex() const { return vertex_; }
    const TruncatedQuotient& parent() const { return parent_; }

    // Standard cycles at the vertex, ascending by degree then path order.
    const std::vector<Path>& basis() const { return basis_; }
    std::vector<Path> basis_up_to(int degree) const;
    int dim_filtered(int degree) const;
    int dim_layer(int degree) const;

    Element unit() const { return Element::vertex_unit(vertex_); }
    Element multiply(const Element& x, const Element& y) const;

    // Coordinates on basis(); requires x reduced and supported on the corner.
    std::vector<Rational> coordinates(const Element& x) const;
    Element from_coordinates(const std::vector<Rational>& coords) const;

private:
    friend class TruncatedQuotient;
    TruncatedQuotient parent_;
    int vertex_ = -1;
    std::vector<Path> basis_;
};

// Builds the preprojective truncation at each weight and compares dimension
// tables; the filtered dimensions should not depend on the weight.
struct WeightSweepReport {
    bool all_equal = true;
    int mismatched_sample = -1; // index into the weight list
    std::optional<DimensionTable::Entry> mismatch;
    std::vector<DimensionTable> tables;
};
WeightSweepReport lambda_independence_check(const DoubleQuiver& dq,
                                            const std::vector<Weight>& weights,
                                            const TruncatedQuotient::Options& opt = TruncatedQuotient::Options());

} // namespace ppalg
