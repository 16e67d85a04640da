#pragma once

#include <string>
#include <vector>

#include "ppalg/cyclotomic.hpp"
#include "ppalg/dynkin.hpp"
#include "ppalg/truncation.hpp"

namespace ppalg {

// 2x2 matrix over cyclotomics, row major: [[a, b], [c, d]].
struct Mat2 {
    Cyclotomic a, b, c, d;

    static Mat2 identity() { return {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)}; }
    static Mat2 diagonal(const Cyclotomic& x, const Cyclotomic& y) {
        return {x, Cyclotomic(0), Cyclotomic(0), y};
    }

    Mat2 mul(const Mat2& o) const;
    Mat2 pow(int e) const;
    Cyclotomic trace() const { return a + d; }
    Cyclotomic det() const { return a * d - b * c; }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

struct ConjugacyClass {
    std::string name;
    long size = 0;
    int element_order = 1;
    Mat2 rep;         // class representative in SL(2)
    Cyclotomic eigen; // one eigenvalue of rep; the other is its inverse
};

struct Irrep {
    std::string name;
    long dim = 0;
    std::vector<Cyclotomic> chi; // value on each class
};

enum class GroupFamily {
    cyclic,
    binary_dihedral,
    binary_tetrahedral,
    binary_octahedral,
    binary_icosahedral
};

// Exact character data for a finite subgroup of SL(2,C): conjugacy classes
// with representative matrices and eigenvalues, and the full table of
// irreducible characters over cyclotomics.  Construction verifies the class
// equation, sum of squared dimensions, orthonormality of all character
// pairs, det 1 and the stated order and eigenvalues of every representative,
// and realness of the defining character.  The symplectic form on the
// defining space is fixed throughout as omega(u, v) = u1 v2 - u2 v1.
class GroupData {
public:
    // parameter is the cyclic order n >= 2, or the binary dihedral index
    // n >= 2 (group order 4n); ignored for the three exceptional groups.
    static GroupData catalog(GroupFamily family, int parameter = 0);
    // Textual form "cyclic:5", "binary-dihedral:3", "binary-tetrahedral",
    // "binary-octahedral", "binary-icosahedral".
    static GroupData parse(const std::string& text);

    GroupFamily family() const { return family_; }
    int parameter() const { return parameter_; }
    const std::string& name() const { return name_; }
    long order() const { return order_; }

    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int irrep_count() const { return static_cast<int>(irreps_.size()); }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    int trivial_index() const { return 0; }

    // Trace of the defining 2-dimensional representation on each class;
    // real-valued since V is self-dual via omega.
    const std::vector<Cyclotomic>& chi_v() const { return chi_v_; }

    // Affine Dynkin label of the McKay graph ("A~4", "D~4", "E~8", ...).
    const std::string& dynkin_label() const { return dynkin_label_; }

    // (1/|G|) sum over classes of size * x * conj(y); throws not_rational
    // when the result leaves the rational line.
    Rational inner_product(const std::vector<Cyclotomic>& x,
                           const std::vector<Cyclotomic>& y) const;

    // Character of Sym^n of the defining representation, per class, computed
    // from the eigenvalue pairs (alpha, alpha^-1).
    std::vector<Cyclotomic> sym_character(int n) const;

private:
    friend struct GroupBuilder;

    GroupFamily family_ = GroupFamily::cyclic;
    int parameter_ = 0;
    std::string name_;
    long order_ = 0;
    std::vector<ConjugacyClass> classes_;
    std::vector<Irrep> irreps_;
    std::vector<Cyclotomic> chi_v_;
    std::string dynkin_label_;

    void validate() const;
};

// Multiplicity of V_j in V tensor V_i, a nonnegative integer.
long tensor_multiplicity(const GroupData& g, int i, int j);

// McKay graph: vertex per irreducible, edge multiplicities from V tensor.
struct McKayGraph {
    std::vector<std::vector<long>> m; // m[i][j] = multiplicity of V_j in V (x) V_i
    std::vector<long> delta;          // irreducible dimensions
    std::string dynkin_label;
    // Irrep index -> vertex index in dynkin_catalog(dynkin_label), under a
    // delta-respecting isomorphism pinning trivial -> extending vertex.
    std::vector<int> to_dynkin;
};

// Builds and cross-validates the McKay graph: symmetry, the dimension
// identity sum_j m_ij delta_j = 2 delta_i, and isomorphism with the Dynkin
// catalog entry; any failure throws validation_error.
McKayGraph mckay_graph(const GroupData& g);

// dim Hom_G(V_j, Sym^n(V) (x) V_i), computed by characters.
long graded_dim_oracle(const GroupData& g, int i, int j, int n);

// Oracle dimensions arranged on the vertices of the matching Dynkin catalog
// quiver (via mckay_graph's isomorphism), comparable with the dimension
// table of the preprojective truncation at weight zero.
DimensionTable oracle_dimension_table(const GroupData& g, int max_degree);

} // namespace ppalg
