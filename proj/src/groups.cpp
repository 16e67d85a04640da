#include "ppalg/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ppalg/errors.hpp"

namespace ppalg {

Mat2 Mat2::mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::pow(int e) const {
    if (e < 0) throw validation_error("matrix power with negative exponent");
    Mat2 acc = Mat2::identity();
    for (int k = 0; k < e; ++k) acc = acc.mul(*this);
    return acc;
}

namespace {

Cyclotomic cy(long n) { return Cyclotomic(n); }
Cyclotomic half(long num) { return Cyclotomic(Rational(num, 2)); }

// Unit quaternion a + bi + cj + dk as an SL(2) matrix.
Mat2 quat(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c, const Cyclotomic& d) {
    const Cyclotomic i = Cyclotomic::zeta(4);
    return {a + b * i, c + d * i, Cyclotomic(0) - c + d * i, a - b * i};
}

// alpha^e for a root of unity of multiplicative order ord, any integer e.
Cyclotomic unit_pow(const Cyclotomic& alpha, int ord, long e) {
    const long r = ((e % ord) + ord) % ord;
    return alpha.pow(static_cast<unsigned long>(r));
}

std::vector<Cyclotomic> row(std::initializer_list<Cyclotomic> xs) { return xs; }

} // namespace

Rational GroupData::inner_product(const std::vector<Cyclotomic>& x,
                                  const std::vector<Cyclotomic>& y) const {
    if (x.size() != classes_.size() || y.size() != classes_.size())
        throw validation_error("class function has wrong length");
    Cyclotomic acc;
    for (std::size_t c = 0; c < classes_.size(); ++c)
        acc += Cyclotomic(classes_[c].size) * x[c] * y[c].conj();
    return (acc * Cyclotomic(Rational(1, order_))).to_rational();
}

std::vector<Cyclotomic> GroupData::sym_character(int n) const {
    if (n < 0) throw validation_error("negative symmetric power");
    std::vector<Cyclotomic> out;
    out.reserve(classes_.size());
    for (const ConjugacyClass& c : classes_) {
        Cyclotomic val;
        for (int t = 0; t <= n; ++t) val += unit_pow(c.eigen, c.element_order, n - 2L * t);
        out.push_back(std::move(val));
    }
    return out;
}

void GroupData::validate() const {
    if (order_ < 2) throw validation_error("group order below 2");
    if (classes_.empty() || irreps_.size() != classes_.size())
        throw validation_error("class and irreducible counts disagree");

    const ConjugacyClass& id = classes_.front();
    if (id.size != 1 || id.element_order != 1 || !(id.rep == Mat2::identity()) ||
        id.eigen != Cyclotomic(1))
        throw validation_error("first class is not the identity");

    std::set<std::string> names;
    long size_sum = 0;
    for (const ConjugacyClass& c : classes_) {
        if (!names.insert(c.name).second) throw validation_error("duplicate class name " + c.name);
        if (c.size < 1 || c.element_order < 1 || order_ % c.element_order != 0)
            throw validation_error("bad class data for " + c.name);
        size_sum += c.size;
        if (c.rep.det() != Cyclotomic(1))
            throw validation_error("representative of " + c.name + " is not in SL(2)");
        const int ord = c.element_order;
        if (c.eigen.pow(ord) != Cyclotomic(1))
            throw validation_error("eigenvalue of " + c.name + " has wrong order");
        for (int p = 2; p <= ord; ++p)
            if (ord % p == 0 && c.eigen.pow(ord / p) == Cyclotomic(1))
                throw validation_error("eigenvalue of " + c.name + " has wrong order");
        if (c.rep.trace() != c.eigen + c.eigen.pow(ord - 1))
            throw validation_error("trace of " + c.name + " disagrees with its eigenvalues");
        if (!(c.rep.pow(ord) == Mat2::identity()))
            throw validation_error("representative of " + c.name + " has wrong order");
    }
    if (size_sum != order_) throw validation_error("class equation fails");

    long dim_square_sum = 0;
    std::set<std::string> inames;
    for (const Irrep& ir : irreps_) {
        if (!inames.insert(ir.name).second)
            throw validation_error("duplicate irreducible name " + ir.name);
        if (ir.dim < 1 || ir.chi.size() != classes_.size())
            throw validation_error("bad character data for " + ir.name);
        if (ir.chi.front() != Cyclotomic(ir.dim))
            throw validation_error("identity value of " + ir.name + " is not its dimension");
        dim_square_sum += ir.dim * ir.dim;
    }
    if (dim_square_sum != order_)
        throw validation_error("squared dimensions do not sum to the group order");
    for (const Cyclotomic& v : irreps_.front().chi)
        if (v != Cyclotomic(1)) throw validation_error("first irreducible is not trivial");

    for (std::size_t i = 0; i < irreps_.size(); ++i)
        for (std::size_t j = i; j < irreps_.size(); ++j) {
            const Rational ip = inner_product(irreps_[i].chi, irreps_[j].chi);
            if (ip != Rational(i == j ? 1 : 0))
                throw validation_error("characters " + irreps_[i].name + ", " + irreps_[j].name +
                                       " are not orthonormal");
        }

    if (chi_v_.size() != classes_.size()) throw validation_error("defining character missing");
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (chi_v_[c] != classes_[c].rep.trace())
            throw validation_error("defining character disagrees with representatives");
        if (chi_v_[c].conj() != chi_v_[c])
            throw validation_error("defining character is not real-valued");
    }
}

struct GroupBuilder {
    GroupFamily family;
    int parameter;
    std::string name;
    long order;
    std::string dynkin;
    std::vector<ConjugacyClass> classes;
    std::vector<Irrep> irreps;

    GroupData build() && {
        GroupData g;
        g.family_ = family;
        g.parameter_ = parameter;
        g.name_ = std::move(name);
        g.order_ = order;
        g.dynkin_label_ = std::move(dynkin);
        g.classes_ = std::move(classes);
        g.irreps_ = std::move(irreps);
        for (const ConjugacyClass& c : g.classes_) g.chi_v_.push_back(c.rep.trace());
        g.validate();
        return g;
    }
};

namespace {

using Builder = GroupBuilder;

GroupData assemble(Builder b) { return std::move(b).build(); }

GroupData make_cyclic(int n) {
    if (n < 2)
        throw validation_error(
            "cyclic parameter must be at least 2 (the trivial group is outside the catalog)");
    Builder b{GroupFamily::cyclic, n, "cyclic:" + std::to_string(n), n,
              "A~" + std::to_string(n - 1), {}, {}};
    for (int k = 0; k < n; ++k) {
        const Cyclotomic zk = Cyclotomic::zeta_power(n, k);
        b.classes.push_back({k == 0 ? "e" : "g^" + std::to_string(k), 1,
                             n / static_cast<int>(std::gcd(n, k)),
                             Mat2::diagonal(zk, Cyclotomic::zeta_power(n, -k)), zk});
    }
    for (int j = 0; j < n; ++j) {
        Irrep ir{"chi" + std::to_string(j), 1, {}};
        for (int k = 0; k < n; ++k) ir.chi.push_back(Cyclotomic::zeta_power(n, 1L * j * k));
        b.irreps.push_back(std::move(ir));
    }
    return assemble(std::move(b));
}

GroupData make_binary_dihedral(int n) {
    if (n < 2) throw validation_error("binary dihedral parameter must be at least 2");
    Builder b{GroupFamily::binary_dihedral, n, "binary-dihedral:" + std::to_string(n), 4L * n,
              "D~" + std::to_string(n + 2), {}, {}};
    const auto zeta = [n](long k) { return Cyclotomic::zeta_power(2 * n, k); };
    const Mat2 bmat{Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0)};
    const Mat2 abmat = Mat2::diagonal(zeta(1), zeta(-1)).mul(bmat);
    b.classes.push_back({"e", 1, 1, Mat2::identity(), Cyclotomic(1)});
    b.classes.push_back({"z", 1, 2, Mat2::diagonal(cy(-1), cy(-1)), cy(-1)});
    for (int k = 1; k < n; ++k)
        b.classes.push_back({"a^" + std::to_string(k), 2,
                             2 * n / static_cast<int>(std::gcd(2 * n, k)),
                             Mat2::diagonal(zeta(k), zeta(-k)), zeta(k)});
    b.classes.push_back({"b", n, 4, bmat, Cyclotomic::zeta(4)});
    b.classes.push_back({"ab", n, 4, abmat, Cyclotomic::zeta(4)});

    const int nc = n + 3;
    const Cyclotomic kappa = n % 2 == 0 ? Cyclotomic(1) : Cyclotomic::zeta(4);
    const auto sign = [](long k) { return cy(k % 2 == 0 ? 1 : -1); };
    Irrep triv{"triv", 1, std::vector<Cyclotomic>(nc, Cyclotomic(1))};
    Irrep detp{"det'", 1, std::vector<Cyclotomic>(nc, Cyclotomic(1))};
    detp.chi[nc - 2] = cy(-1);
    detp.chi[nc - 1] = cy(-1);
    Irrep sp1{"sp1", 1, {}}, sp2{"sp2", 1, {}};
    sp1.chi = {Cyclotomic(1), sign(n)};
    for (int k = 1; k < n; ++k) sp1.chi.push_back(sign(k));
    sp2.chi = sp1.chi;
    sp1.chi.push_back(kappa);
    sp1.chi.push_back(Cyclotomic(0) - kappa);
    sp2.chi.push_back(Cyclotomic(0) - kappa);
    sp2.chi.push_back(kappa);
    b.irreps = {triv, detp, sp1, sp2};
    for (int h = 1; h < n; ++h) {
        Irrep rho{"rho" + std::to_string(h), 2, {}};
        rho.chi = {Cyclotomic(2), cy(2) * sign(h)};
        for (int k = 1; k < n; ++k) rho.chi.push_back(zeta(1L * h * k) + zeta(-1L * h * k));
        rho.chi.push_back(Cyclotomic(0));
        rho.chi.push_back(Cyclotomic(0));
        b.irreps.push_back(std::move(rho));
    }
    return assemble(std::move(b));
}

GroupData make_binary_tetrahedral() {
    Builder b{GroupFamily::binary_tetrahedral, 0, "binary-tetrahedral", 24, "E~6", {}, {}};
    const Cyclotomic i4 = Cyclotomic::zeta(4), w = Cyclotomic::zeta(3), w2 = w.pow(2);
    const Mat2 s = quat(half(-1), half(1), half(1), half(1));
    const Mat2 s2 = quat(half(-1), half(-1), half(-1), half(-1));
    b.classes = {
        {"e", 1, 1, Mat2::identity(), Cyclotomic(1)},
        {"z", 1, 2, Mat2::diagonal(cy(-1), cy(-1)), cy(-1)},
        {"4a", 6, 4, Mat2::diagonal(i4, i4.pow(3)), i4},
        {"3a", 4, 3, s, w},
        {"3b", 4, 3, s2, w},
        {"6a", 4, 6, quat(half(1), half(-1), half(-1), half(-1)), Cyclotomic::zeta(6)},
        {"6b", 4, 6, quat(half(1), half(1), half(1), half(1)), Cyclotomic::zeta(6)},
    };
    const Cyclotomic o = Cyclotomic(1), n1 = cy(-1);
    b.irreps = {
        {"triv", 1, row({o, o, o, o, o, o, o})},
        {"om1", 1, row({o, o, o, w, w2, w, w2})},
        {"om2", 1, row({o, o, o, w2, w, w2, w})},
        {"2a", 2, row({cy(2), cy(-2), cy(0), n1, n1, o, o})},
        {"2b", 2, row({cy(2), cy(-2), cy(0), Cyclotomic(0) - w, Cyclotomic(0) - w2, w, w2})},
        {"2c", 2, row({cy(2), cy(-2), cy(0), Cyclotomic(0) - w2, Cyclotomic(0) - w, w2, w})},
        {"3d", 3, row({cy(3), cy(3), n1, cy(0), cy(0), cy(0), cy(0)})},
    };
    return assemble(std::move(b));
}

GroupData make_binary_octahedral() {
    Builder b{GroupFamily::binary_octahedral, 0, "binary-octahedral", 48, "E~7", {}, {}};
    const Cyclotomic i4 = Cyclotomic::zeta(4);
    const Cyclotomic z8 = Cyclotomic::zeta(8);
    const Cyclotomic r2 = z8 + z8.pow(7);                 // sqrt(2)
    const Cyclotomic rh = r2 * half(1);                   // 1/sqrt(2)
    const Mat2 s = quat(half(-1), half(1), half(1), half(1));
    b.classes = {
        {"e", 1, 1, Mat2::identity(), Cyclotomic(1)},
        {"z", 1, 2, Mat2::diagonal(cy(-1), cy(-1)), cy(-1)},
        {"4a", 6, 4, Mat2::diagonal(i4, i4.pow(3)), i4},
        {"8a", 6, 8, Mat2::diagonal(z8, z8.pow(7)), z8},
        {"8b", 6, 8, Mat2::diagonal(z8.pow(3), z8.pow(5)), z8.pow(3)},
        {"3a", 8, 3, s, Cyclotomic::zeta(3)},
        {"6a", 8, 6, quat(half(1), half(-1), half(-1), half(-1)), Cyclotomic::zeta(6)},
        {"4b", 12, 4, quat(cy(0), rh, rh, cy(0)), i4},
    };
    const Cyclotomic o = Cyclotomic(1), n1 = cy(-1), zz = Cyclotomic(0);
    const Cyclotomic nr2 = zz - r2;
    b.irreps = {
        {"triv", 1, row({o, o, o, o, o, o, o, o})},
        {"sgn", 1, row({o, o, o, n1, n1, o, o, n1})},
        {"2a", 2, row({cy(2), cy(-2), zz, r2, nr2, n1, o, zz})},
        {"2b", 2, row({cy(2), cy(-2), zz, nr2, r2, n1, o, zz})},
        {"2c", 2, row({cy(2), cy(2), cy(2), zz, zz, n1, n1, zz})},
        {"3a", 3, row({cy(3), cy(3), n1, n1, n1, zz, zz, o})},
        {"3b", 3, row({cy(3), cy(3), n1, o, o, zz, zz, n1})},
        {"4d", 4, row({cy(4), cy(-4), zz, zz, zz, o, n1, zz})},
    };
    return assemble(std::move(b));
}

GroupData make_binary_icosahedral() {
    Builder b{GroupFamily::binary_icosahedral, 0, "binary-icosahedral", 120, "E~8", {}, {}};
    const Cyclotomic i4 = Cyclotomic::zeta(4);
    const Cyclotomic z5 = Cyclotomic::zeta(5);
    const Cyclotomic tau = Cyclotomic(0) - z5.pow(2) - z5.pow(3); // golden ratio
    const Cyclotomic sig = Cyclotomic(1) - tau;                   // 1 - tau = -1/tau
    const Cyclotomic th = tau * half(1);                          // tau/2
    const Cyclotomic uh = (tau - Cyclotomic(1)) * half(1);        // 1/(2 tau)
    const Mat2 s = quat(half(-1), half(1), half(1), half(1));
    b.classes = {
        {"e", 1, 1, Mat2::identity(), Cyclotomic(1)},
        {"z", 1, 2, Mat2::diagonal(cy(-1), cy(-1)), cy(-1)},
        {"5a", 12, 5, quat(uh, half(1), th, cy(0)), z5},
        {"5b", 12, 5, quat(Cyclotomic(0) - th, half(1), uh, cy(0)), z5.pow(2)},
        {"10a", 12, 10, quat(th, half(1), uh, cy(0)), Cyclotomic::zeta(10)},
        {"10b", 12, 10, quat(Cyclotomic(0) - uh, half(1), th, cy(0)),
         Cyclotomic::zeta_power(10, 3)},
        {"3a", 20, 3, s, Cyclotomic::zeta(3)},
        {"6a", 20, 6, quat(half(1), half(-1), half(-1), half(-1)), Cyclotomic::zeta(6)},
        {"4a", 30, 4, Mat2::diagonal(i4, i4.pow(3)), i4},
    };
    const Cyclotomic o = Cyclotomic(1), n1 = cy(-1), zz = Cyclotomic(0);
    const Cyclotomic tm1 = tau - o;                                // tau - 1
    const Cyclotomic nt = zz - tau;
    b.irreps = {
        {"triv", 1, row({o, o, o, o, o, o, o, o, o})},
        {"2a", 2, row({cy(2), cy(-2), tm1, nt, tau, sig, n1, o, zz})},
        {"2b", 2, row({cy(2), cy(-2), nt, tm1, sig, tau, n1, o, zz})},
        {"3a", 3, row({cy(3), cy(3), tau, sig, sig, tau, zz, zz, n1})},
        {"3b", 3, row({cy(3), cy(3), sig, tau, tau, sig, zz, zz, n1})},
        {"4a", 4, row({cy(4), cy(4), n1, n1, n1, n1, o, o, zz})},
        {"4b", 4, row({cy(4), cy(-4), n1, n1, o, o, o, n1, zz})},
        {"5d", 5, row({cy(5), cy(5), zz, zz, zz, zz, n1, n1, o})},
        {"6d", 6, row({cy(6), cy(-6), o, o, n1, n1, zz, zz, zz})},
    };
    return assemble(std::move(b));
}

} // namespace

GroupData GroupData::catalog(GroupFamily family, int parameter) {
    switch (family) {
    case GroupFamily::cyclic: return make_cyclic(parameter);
    case GroupFamily::binary_dihedral: return make_binary_dihedral(parameter);
    case GroupFamily::binary_tetrahedral: return make_binary_tetrahedral();
    case GroupFamily::binary_octahedral: return make_binary_octahedral();
    case GroupFamily::binary_icosahedral: return make_binary_icosahedral();
    }
    throw validation_error("unknown group family");
}

GroupData GroupData::parse(const std::string& text) {
    std::string head = text;
    std::string param;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        head = text.substr(0, colon);
        param = text.substr(colon + 1);
    }
    const auto need_param = [&](GroupFamily f) {
        if (param.empty())
            throw validation_error("group \"" + head + "\" needs a parameter, e.g. " + head + ":3");
        std::size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(param, &pos);
        } catch (const std::exception&) {
            throw validation_error("bad group parameter \"" + param + "\"");
        }
        if (pos != param.size()) throw validation_error("bad group parameter \"" + param + "\"");
        return catalog(f, n);
    };
    const auto no_param = [&](GroupFamily f) {
        if (!param.empty())
            throw validation_error("group \"" + head + "\" takes no parameter");
        return catalog(f);
    };
    if (head == "cyclic") return need_param(GroupFamily::cyclic);
    if (head == "binary-dihedral") return need_param(GroupFamily::binary_dihedral);
    if (head == "binary-tetrahedral") return no_param(GroupFamily::binary_tetrahedral);
    if (head == "binary-octahedral") return no_param(GroupFamily::binary_octahedral);
    if (head == "binary-icosahedral") return no_param(GroupFamily::binary_icosahedral);
    throw validation_error("unknown group \"" + text + "\"");
}

long tensor_multiplicity(const GroupData& g, int i, int j) {
    if (i < 0 || j < 0 || i >= g.irrep_count() || j >= g.irrep_count())
        throw validation_error("irreducible index out of range");
    std::vector<Cyclotomic> prod;
    prod.reserve(g.class_count());
    for (int c = 0; c < g.class_count(); ++c)
        prod.push_back(g.chi_v()[c] * g.irreps()[i].chi[c]);
    Rational m;
    try {
        m = g.inner_product(prod, g.irreps()[j].chi);
    } catch (const not_rational&) {
        throw validation_error("tensor multiplicity is not rational: corrupted character data");
    }
    if (!m.is_integer() || m < Rational(0))
        throw validation_error("tensor multiplicity is not a nonnegative integer");
    return m.to_long();
}

McKayGraph mckay_graph(const GroupData& g) {
    const int n = g.irrep_count();
    McKayGraph out;
    out.m.assign(n, std::vector<long>(n));
    out.dynkin_label = g.dynkin_label();
    for (int i = 0; i < n; ++i) {
        out.delta.push_back(g.irreps()[i].dim);
        for (int j = 0; j < n; ++j) out.m[i][j] = tensor_multiplicity(g, i, j);
    }
    for (int i = 0; i < n; ++i) {
        long weighted = 0;
        for (int j = 0; j < n; ++j) {
            if (out.m[i][j] != out.m[j][i])
                throw validation_error("McKay multiplicities are not symmetric");
            weighted += out.m[i][j] * out.delta[j];
        }
        if (weighted != 2 * out.delta[i])
            throw validation_error("McKay multiplicities fail the dimension identity");
    }

    LabeledGraph a;
    a.n = n;
    a.adj.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.adj[i][j] = static_cast<int>(out.m[i][j]);
    a.label = out.delta;
    a.root = g.trivial_index();

    const DynkinModel model = dynkin_catalog(g.dynkin_label());
    LabeledGraph bg = underlying_graph(model.quiver);
    bg.label = model.delta;
    bg.root = model.extending;

    const auto iso = find_graph_isomorphism(a, bg);
    if (!iso)
        throw validation_error("McKay graph of " + g.name() + " does not match " +
                               g.dynkin_label());
    out.to_dynkin = *iso;
    return out;
}

long graded_dim_oracle(const GroupData& g, int i, int j, int n) {
    if (i < 0 || j < 0 || i >= g.irrep_count() || j >= g.irrep_count())
        throw validation_error("irreducible index out of range");
    const std::vector<Cyclotomic> sym = g.sym_character(n);
    std::vector<Cyclotomic> prod;
    prod.reserve(g.class_count());
    for (int c = 0; c < g.class_count(); ++c)
        prod.push_back(sym[c] * g.irreps()[i].chi[c]);
    Rational m;
    try {
        m = g.inner_product(prod, g.irreps()[j].chi);
    } catch (const not_rational&) {
        throw validation_error("graded dimension is not rational: corrupted character data");
    }
    if (!m.is_integer() || m < Rational(0))
        throw validation_error("graded dimension is not a nonnegative integer");
    return m.to_long();
}

DimensionTable oracle_dimension_table(const GroupData& g, int max_degree) {
    const McKayGraph mg = mckay_graph(g);
    const int n = g.irrep_count();
    DimensionTable table(n, max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        const std::vector<Cyclotomic> sym = g.sym_character(d);
        for (int i = 0; i < n; ++i) {
            std::vector<Cyclotomic> prod;
            prod.reserve(g.class_count());
            for (int c = 0; c < g.class_count(); ++c)
                prod.push_back(sym[c] * g.irreps()[i].chi[c]);
            for (int j = 0; j < n; ++j) {
                const Rational m = g.inner_product(prod, g.irreps()[j].chi);
                if (!m.is_integer() || m < Rational(0))
                    throw validation_error("graded dimension is not a nonnegative integer");
                table.at(mg.to_dynkin[i], mg.to_dynkin[j], d) = m.to_long();
            }
        }
    }
    return table;
}

} // namespace ppalg
