#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppalg/pathalg.hpp"
#include "ppalg/quiver.hpp"
#include "ppalg/rational.hpp"

namespace ppalg {

// Explicit equivariant-map model for the cyclic subgroup of SL(2) generated
// by diag(zeta_n, zeta_n^-1).  The irreducibles are the n linear characters
// chi_i(g) = zeta_n^i; a homogeneous polynomial map V -> Hom(V_i, V_j) of
// degree d is spanned by the monomials u^p v^q with p + q = d and
// p - q = j - i mod n, where u, v are the coordinates dual to the standard
// basis e1, e2 of V.
//
// Conventions fixed here and used consistently: omega(x, y) = x1 y2 - x2 y1
// (so omega(e1, e2) = +1), and iota: V* -> V defined by f(x) = omega(iota(f), x)
// gives iota(u) = -e2, iota(v) = e1.

// u^(u_pow) v^(v_pow).
struct WeightMonomial {
    int u_pow = 0;
    int v_pow = 0;

    int degree() const { return u_pow + v_pow; }
    Rational eval(const Rational& x1, const Rational& x2) const;
    std::string str() const;

    friend bool operator==(const WeightMonomial&, const WeightMonomial&) = default;
};

class CyclicEquivariantModel {
public:
    // order >= 2; the trivial group sits outside the catalog.
    explicit CyclicEquivariantModel(int order);

    int order() const { return n_; }
    // The cycle quiver k -> k+1 mod n, doubled.  Base arrows carry the
    // letter u, starred arrows the letter v.
    const DoubleQuiver& quiver() const { return dq_; }

    // Monomial basis of the degree-d maps V -> Hom(V_source, V_target),
    // in descending powers of u.
    std::vector<WeightMonomial> basis(int source, int target, int degree) const;
    long dimension(int source, int target, int degree) const;

    // Tensor word of a double-quiver path over the letters u, v; the arrow
    // applied last is written first.  Trivial paths give the empty word.
    std::string word(const Path& p) const;

    // Components of phi(sum [a, a*]) - delta omega at a vertex, collected
    // by tensor word with zero coefficients dropped.  An empty map means
    // the moment identity holds there exactly.
    std::map<std::string, Rational> moment_defect(int vertex) const;
    // Defect vanishes at every vertex.
    bool moment_identity_holds() const;

    // tr((iota (x) id) phi(q) phi(p)) for single arrows p: i -> j and
    // q: j -> i.  The pairing normalization asks for +1 on (a, a*).
    Rational pairing_trace(const Path& p, const Path& q) const;

private:
    char letter(int arrow) const;
    void check_vertex(int v) const;

    int n_;
    DoubleQuiver dq_;
};

// Values at x of the positive-degree monomial basis of the maps
// V -> End(V_vertex), degrees 1 through max_degree.  The span is all of
// End(V_vertex) = C exactly when some value is nonzero.
struct EvaluationSpan {
    std::vector<Rational> values;
    bool full = false;
};

EvaluationSpan generic_point_evaluation(int order, int vertex, const Rational& x1,
                                        const Rational& x2, int max_degree);

} // namespace ppalg
