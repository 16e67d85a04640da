#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppalg/pathalg.hpp"
#include "ppalg/truncation.hpp"

namespace ppalg {

// Verification routines for structural claims about corner algebras
// e_v T e_v of truncated preprojective quotients: standard polynomial
// identities, centers and central lifts, singularity presentations of the
// corner at the extending vertex, chain minimal polynomials, and the star
// quiver presentation of the center corner.  Every verdict is relative to
// the truncation bound and says so.

// Alternating sum sum_pi sign(pi) x_pi(1) ... x_pi(k), reduced to normal
// form.  The arguments must lie in a common corner and their degrees must
// fit the truncation bound together.
Element standard_identity(const TruncatedQuotient& t, const std::vector<Element>& args);

struct IdentityReport {
    int vertex = -1;
    int identity_degree = 0;  // k in S_k
    int max_degree = 0;
    int argument_degree_cap = 0;
    std::uint64_t seed = 0;
    int exhaustive_checked = 0;
    int samples_checked = 0;
    bool identity_holds = false;
    std::vector<Element> failure_args;  // first sampled tuple with S_k != 0
    Element failure_value;
    bool minimality_vacuous = false;  // k == 2: nothing below to witness
    bool witness_found = false;       // stored tuple with S_{k-2} != 0
    std::vector<Element> witness_args;
    Element witness_value;
    std::string verdict;  // "holds" | "fails" | "inconclusive"
};

// Checks the standard identity of degree 2 * delta[vertex] on the corner:
// an exhaustive pass over degree-<=1 basis tuples plus seeded random
// rational combinations of the degree-<=2 corner basis.  For k > 2 also
// searches a nonzero S_{k-2} witness (basis tuples of ascending degree,
// then random tuples), making minimality a stored artifact.  Requires a
// preprojective quotient with delta . lambda = 0.
IdentityReport verify_standard_identity(const TruncatedQuotient& t,
                                        const std::vector<long>& delta, int vertex,
                                        int trials = 20, std::uint64_t seed = 1);

struct CentralLift {
    Element source;  // x, reduced
    Element lift;    // z with e_v z e_v = x, diagonal, [z, arrow] = 0
    bool found = false;
    bool unique = false;   // constraint system had trivial nullspace
    int partner_degree = 0;  // commutation re-verified against basis up to here
};

// The unique z with deg z <= deg x, e_vertex z e_vertex = x, and [z, g] = 0
// for every arrow g of the quotient quiver.  Commutation with idempotents
// forces z diagonal, so the solver works on standard loops only.  found is
// false when deg x + 1 exceeds the truncation bound.
CentralLift central_lift(const TruncatedQuotient& t, int vertex, const Element& x);

struct CenterReport {
    int vertex = -1;
    int reference_vertex = 0;
    int through_degree = 0;
    int partner_degree = 0;  // commutation partners up to this degree
    // Per-degree layer dimensions, indices 0..through_degree.
    std::vector<long> commutant_layers;  // z in the corner with [z, b] = 0
    std::vector<long> reference_layers;  // corner at the reference vertex
    std::vector<long> lifted_layers;     // span of e_v lift(x) e_v over x
    bool layers_match = false;
    bool lifts_unique = true;
    bool lifts_multiplicative = true;
    std::string verdict;  // "holds" | "fails" | "inconclusive"
};

// Compares, degree by degree, the center of the corner at `vertex` with the
// corner at `reference_vertex` (the extending vertex in catalog models).
// The commutant computation bounds the center from above; lifts of the
// reference corner bound it from below; equality of all three layer
// sequences is the "holds" verdict.  Partner budget is max_degree minus
// through_degree.
CenterReport center_dimensions(const TruncatedQuotient& t, int vertex, int through_degree,
                               int reference_vertex = 0);

struct CornerPresentation {
    std::vector<Element> generators;  // standard-path generators, ascending
    std::vector<int> generator_degrees;
    // Relation sum_m coeff(m) g1^m1 g2^m2 ... = 0 over exponent vectors.
    std::map<std::vector<int>, Rational> relation;
    int relation_degree = 0;  // weighted total degree
    bool minimal = false;     // monomials of lower degree are independent
    bool commutative = true;  // generator pairs commute in the corner
};

// Greedy minimal generators of the corner at the extending vertex and the
// lowest-degree monic relation among their monomials, found by exact
// nullspace computation.  Throws resource_limit when no relation fits the
// truncation bound.
CornerPresentation corner_presentation(const TruncatedQuotient& t, int vertex);

struct ChainReport {
    int n = 0;  // chain length; the corner algebra has dimension n
    bool scalar_algebra = false;  // n == 1: the corner is just C
    // Monic coefficients by ascending power, size n + 1.
    std::vector<Rational> formula;
    std::vector<Rational> truncated;
    bool agree = false;
};

// Minimal polynomial of the end loop a a* in the chain-with-one-sided-end
// relation algebra, both by the closed product formula
// x (x + l_{n-1}) (x + l_{n-1} + l_{n-2}) ... and independently by linear
// dependence of loop powers in a degree-2n truncation.
ChainReport chain_min_poly(const std::vector<Rational>& lambdas);

struct StarPresentationReport {
    std::vector<std::vector<Rational>> roots;
    Rational mu;
    int max_degree = 0;
    std::vector<Element> arm_residues;  // P_i(a_i1 a_i1*) reduced
    Element sum_residue;                // sum_i a_i1 a_i1* - mu e_c reduced
    bool relations_hold = false;
    // Filtered dimensions of e_c (-) e_c vs the one-vertex presentation
    // <x_1..x_n | P_i(x_i), sum x_i = mu> with x_i of weight 2.
    std::vector<long> corner_dims;
    std::vector<long> loop_dims;
    bool dims_match = false;
    std::string verdict;  // "holds" | "fails"
};

// Checks that the corner at the center of the star quiver with the weight
// determined by the root lists is presented by the polynomials P_i(x) =
// prod_j (x - alpha_ij) under x_i -> a_i1 a_i1*.
StarPresentationReport verify_star_presentation(const std::vector<std::vector<Rational>>& roots,
                                                const Rational& mu, int max_degree = 6);

} // namespace ppalg
