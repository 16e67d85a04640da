#include "ppalg/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ppalg/dynkin.hpp"
#include "ppalg/errors.hpp"
#include "ppalg/linalg.hpp"

namespace ppalg {
namespace {

// Monic polynomial with the given roots, coefficients by ascending power.
std::vector<Rational> monic_from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> poly{Rational(1)};
    for (const Rational& r : roots) {
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - r * poly[k];
        }
        poly = std::move(next);
    }
    return poly;
}

int common_corner_vertex(const std::vector<Element>& args) {
    int vertex = -1;
    for (const Element& x : args)
        for (const auto& [p, c] : x.terms()) {
            if (p.source() != p.target())
                throw validation_error("standard identity arguments must be corner elements");
            if (vertex < 0) vertex = p.source();
            if (p.source() != vertex)
                throw validation_error("standard identity arguments lie in different corners");
        }
    return vertex;
}

// Deterministic small integer coefficients; distributions are avoided so
// that seeded runs agree across platforms.
long small_coeff(std::mt19937_64& rng) { return static_cast<long>(rng() % 7) - 3; }

Element random_combination(std::mt19937_64& rng, const std::vector<Path>& basis) {
    Element x;
    for (const Path& p : basis) {
        const long c = small_coeff(rng);
        if (c != 0) x.add_term(p, Rational(c));
    }
    return x;
}

// All standard paths of degree at most `bound`, with a dense row index.
std::map<Path, int> path_rows(const TruncatedQuotient& t, int bound) {
    std::map<Path, int> rows;
    const int nv = t.quiver().vertex_count();
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            for (const Path& p : t.standard_paths(i, j)) {
                if (p.degree() > bound) break;
                rows.emplace(p, 0);
            }
    int r = 0;
    for (auto& [p, idx] : rows) idx = r++;
    return rows;
}

Element commutator(const TruncatedQuotient& t, const Element& a, const Element& b) {
    return t.multiply(a, b) - t.multiply(b, a);
}

} // namespace

Element standard_identity(const TruncatedQuotient& t, const std::vector<Element>& args) {
    if (args.empty()) throw validation_error("standard identity needs at least one argument");
    common_corner_vertex(args);
    long total = 0;
    for (const Element& x : args) total += x.degree();
    if (total > t.max_degree())
        throw degree_overflow("standard identity arguments exceed the truncation bound");

    const int k = static_cast<int>(args.size());
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Element sum;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (idx[i] > idx[j]) ++inversions;
        Element prod = args[idx[0]];
        for (int j = 1; j < k; ++j) prod = t.multiply(prod, args[idx[j]]);
        if (inversions % 2)
            sum -= prod;
        else
            sum += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return t.normal_form(sum);
}

IdentityReport verify_standard_identity(const TruncatedQuotient& t,
                                        const std::vector<long>& delta, int vertex,
                                        int trials, std::uint64_t seed) {
    const int nv = t.quiver().vertex_count();
    if (static_cast<int>(delta.size()) != nv)
        throw validation_error("dimension vector does not match the quiver");
    if (vertex < 0 || vertex >= nv) throw validation_error("vertex out of range");
    if (!t.weight())
        throw validation_error("identity check needs a moment-map quotient with a weight");
    if (!pairing(*t.weight(), delta).is_zero())
        throw validation_error("identity degree claim assumes delta . lambda = 0");

    IdentityReport rep;
    rep.vertex = vertex;
    rep.identity_degree = static_cast<int>(2 * delta[vertex]);
    rep.max_degree = t.max_degree();
    rep.seed = seed;
    const int k = rep.identity_degree;
    if (k > rep.max_degree)
        throw validation_error("truncation bound too small for the identity degree");
    rep.argument_degree_cap = std::min(2, rep.max_degree / k);

    const CornerAlgebra corner = t.corner(vertex);
    const auto evaluate = [&](const std::vector<Element>& args, Element& value) {
        value = standard_identity(t, args);
        return value.is_zero();
    };

    // Exhaustive pass over degree-<=1 basis tuples.
    const std::vector<Path> b1 = corner.basis_up_to(1);
    rep.identity_holds = true;
    if (!b1.empty()) {
        std::vector<int> tuple(k, 0);
        while (true) {
            std::vector<Element> args;
            args.reserve(k);
            for (int j = 0; j < k; ++j) args.push_back(Element::path_term(b1[tuple[j]]));
            Element value;
            ++rep.exhaustive_checked;
            if (!evaluate(args, value) && rep.identity_holds) {
                rep.identity_holds = false;
                rep.failure_args = args;
                rep.failure_value = value;
            }
            int j = k - 1;
            while (j >= 0 && tuple[j] + 1 == static_cast<int>(b1.size())) tuple[j--] = 0;
            if (j < 0) break;
            ++tuple[j];
        }
    }

    // Seeded random combinations of the low-degree corner basis.
    std::mt19937_64 rng(seed);
    const std::vector<Path> low = corner.basis_up_to(rep.argument_degree_cap);
    for (int s = 0; s < trials; ++s) {
        std::vector<Element> args;
        args.reserve(k);
        for (int j = 0; j < k; ++j) args.push_back(random_combination(rng, low));
        Element value;
        ++rep.samples_checked;
        if (!evaluate(args, value) && rep.identity_holds) {
            rep.identity_holds = false;
            rep.failure_args = args;
            rep.failure_value = value;
        }
    }

    // Minimality: store a tuple with S_{k-2} != 0.  The corner unit is
    // central and an alternating sum of even arity vanishes on central
    // arguments, so the pool keeps positive-degree basis elements only; a
    // tuple is admissible when its degrees sum to at most the truncation
    // bound.  Basis tuples in ascending total degree first, then random
    // combinations drawn from a uniformly safe low-degree prefix.
    if (k == 2) {
        rep.minimality_vacuous = true;
    } else {
        const int kw = k - 2;
        std::vector<Path> pool;
        for (const Path& p : corner.basis_up_to(rep.max_degree))
            if (p.degree() >= 1) pool.push_back(p);
        if (!pool.empty()) {
            const int d_min = pool.front().degree();
            const int single_cap = rep.max_degree - (kw - 1) * d_min;
            while (!pool.empty() && pool.back().degree() > single_cap) pool.pop_back();
        }
        std::vector<std::vector<int>> tuples;
        if (!pool.empty()) {
            std::vector<int> tup(kw, 0);
            while (tuples.size() < 500000) {
                int total = 0;
                for (int x : tup) total += pool[x].degree();
                if (total <= rep.max_degree) tuples.push_back(tup);
                int j = kw - 1;
                while (j >= 0 && tup[j] + 1 == static_cast<int>(pool.size())) tup[j--] = 0;
                if (j < 0) break;
                ++tup[j];
            }
        }
        std::stable_sort(tuples.begin(), tuples.end(),
                         [&](const std::vector<int>& a, const std::vector<int>& b) {
                             int da = 0, db = 0;
                             for (int x : a) da += pool[x].degree();
                             for (int x : b) db += pool[x].degree();
                             return da < db;
                         });
        for (const auto& choice : tuples) {
            std::vector<Element> args;
            for (int x : choice) args.push_back(Element::path_term(pool[x]));
            Element value;
            if (!evaluate(args, value)) {
                rep.witness_found = true;
                rep.witness_args = args;
                rep.witness_value = value;
                break;
            }
        }
        if (!rep.witness_found && !pool.empty()) {
            const std::vector<Path> safe =
                corner.basis_up_to(std::max(1, rep.max_degree / kw));
            for (int s = 0; s < trials && !rep.witness_found; ++s) {
                std::vector<Element> args;
                for (int j = 0; j < kw; ++j) args.push_back(random_combination(rng, safe));
                Element value;
                if (!evaluate(args, value)) {
                    rep.witness_found = true;
                    rep.witness_args = args;
                    rep.witness_value = value;
                }
            }
        }
    }

    if (!rep.identity_holds)
        rep.verdict = "fails";
    else if (rep.minimality_vacuous || rep.witness_found)
        rep.verdict = "holds";
    else
        rep.verdict = "inconclusive";
    return rep;
}

CentralLift central_lift(const TruncatedQuotient& t, int vertex, const Element& x) {
    const int nv = t.quiver().vertex_count();
    if (vertex < 0 || vertex >= nv) throw validation_error("vertex out of range");
    CentralLift out;
    const Element xr = t.normal_form(x);
    for (const auto& [p, c] : xr.terms())
        if (p.source() != vertex || p.target() != vertex)
            throw validation_error("lift source must lie in the corner at the given vertex");
    out.source = xr;
    const int N = t.max_degree();
    if (xr.is_zero()) {
        out.found = true;
        out.unique = true;
        out.partner_degree = N;
        return out;
    }

    int max_arrow_weight = 1;
    for (const Arrow& a : t.quiver().arrows())
        max_arrow_weight = std::max(max_arrow_weight, a.weight);
    const int dx = xr.degree();
    if (dx + max_arrow_weight > N) return out; // cannot impose commutation

    // Commutation with idempotents forces a diagonal lift, so the unknowns
    // are the standard loops away from the pinned corner.
    std::vector<Path> unknowns;
    for (int v = 0; v < nv; ++v) {
        if (v == vertex) continue;
        for (const Path& p : t.standard_paths(v, v)) {
            if (p.degree() > dx) break;
            unknowns.push_back(p);
        }
    }

    const std::map<Path, int> rows = path_rows(t, dx + max_arrow_weight);
    const int R = static_cast<int>(rows.size());
    const int U = static_cast<int>(unknowns.size());
    const int A = t.quiver().arrow_count();
    QMatrix mat(R * A, U);
    std::vector<Rational> rhs(static_cast<std::size_t>(R) * A);
    for (int a = 0; a < A; ++a) {
        const Element g = Element::path_term(Path::from_arrows(t.quiver(), {a}));
        for (int u = 0; u < U; ++u) {
            const Element comm = commutator(t, Element::path_term(unknowns[u]), g);
            for (const auto& [p, c] : comm.terms()) mat.at(a * R + rows.at(p), u) = c;
        }
        const Element fixed = commutator(t, g, xr); // minus [x, g]
        for (const auto& [p, c] : fixed.terms()) rhs[a * R + rows.at(p)] = c;
    }
    const LinearSolution sol = solve(mat, rhs);
    if (!sol.consistent) return out; // truncation budget too small
    Element z = xr;
    for (int u = 0; u < U; ++u)
        if (!sol.x[u].is_zero()) z.add_term(unknowns[u], sol.x[u]);
    out.lift = z;
    out.unique = (sol.nullity == 0);
    out.partner_degree = N - dx;

    // Re-verify commutation against every standard path within budget.
    for (const auto& [p, r] : path_rows(t, out.partner_degree)) {
        if (!commutator(t, z, Element::path_term(p)).is_zero()) return out;
    }
    out.found = true;
    return out;
}

CenterReport center_dimensions(const TruncatedQuotient& t, int vertex, int through_degree,
                               int reference_vertex) {
    const int nv = t.quiver().vertex_count();
    if (vertex < 0 || vertex >= nv || reference_vertex < 0 || reference_vertex >= nv)
        throw validation_error("vertex out of range");
    const int N = t.max_degree();
    if (through_degree < 0 || through_degree > N)
        throw validation_error("report degree outside the truncation bound");

    CenterReport rep;
    rep.vertex = vertex;
    rep.reference_vertex = reference_vertex;
    rep.through_degree = through_degree;
    rep.partner_degree = N - through_degree;

    const CornerAlgebra corner = t.corner(vertex);
    const CornerAlgebra reference = t.corner(reference_vertex);

    if (rep.partner_degree < 1) {
        rep.verdict = "inconclusive";
        return rep;
    }

    // Upper bound: loops commuting with every corner basis element of
    // degree within the partner budget.
    std::vector<Element> partners;
    for (const Path& p : corner.basis_up_to(rep.partner_degree))
        partners.push_back(Element::path_term(p));
    const std::vector<Path> loops = corner.basis_up_to(through_degree);
    const std::map<Path, int> rows = path_rows(t, N);
    std::vector<long> filtered(through_degree + 1, 0);
    for (int d = 0; d <= through_degree; ++d) {
        int U = 0;
        while (U < static_cast<int>(loops.size()) && loops[U].degree() <= d) ++U;
        QMatrix mat(static_cast<int>(rows.size()) * static_cast<int>(partners.size()), U);
        for (std::size_t b = 0; b < partners.size(); ++b)
            for (int u = 0; u < U; ++u) {
                const Element comm =
                    commutator(t, Element::path_term(loops[u]), partners[b]);
                for (const auto& [p, c] : comm.terms())
                    mat.at(static_cast<int>(b) * static_cast<int>(rows.size()) + rows.at(p),
                           u) = c;
            }
        filtered[d] = static_cast<long>(U) - rank(mat);
    }
    rep.commutant_layers.resize(through_degree + 1);
    for (int d = 0; d <= through_degree; ++d)
        rep.commutant_layers[d] = filtered[d] - (d ? filtered[d - 1] : 0);

    rep.reference_layers.resize(through_degree + 1);
    for (int d = 0; d <= through_degree; ++d)
        rep.reference_layers[d] = reference.dim_layer(d);

    // Lower bound: project central lifts of the reference corner basis.
    const std::vector<Path> ref_basis = reference.basis_up_to(through_degree);
    std::vector<CentralLift> lifts;
    bool all_found = true;
    for (const Path& b : ref_basis) {
        CentralLift lift = central_lift(t, reference_vertex, Element::path_term(b));
        all_found = all_found && lift.found;
        rep.lifts_unique = rep.lifts_unique && lift.unique;
        lifts.push_back(std::move(lift));
    }
    rep.lifted_layers.assign(through_degree + 1, 0);
    if (all_found) {
        const std::vector<Path> corner_basis = corner.basis();
        std::map<Path, int> cols;
        for (const Path& p : corner_basis) cols.emplace(p, static_cast<int>(cols.size()));
        long previous = 0;
        for (int d = 0; d <= through_degree; ++d) {
            QMatrix mat(static_cast<int>(lifts.size()), static_cast<int>(cols.size()));
            int used = 0;
            for (std::size_t i = 0; i < lifts.size(); ++i) {
                if (ref_basis[i].degree() > d) continue;
                const Element proj = lifts[i].lift.corner(vertex, vertex);
                for (const auto& [p, c] : proj.terms()) mat.at(used, cols.at(p)) = c;
                ++used;
            }
            const long r = rank(mat);
            rep.lifted_layers[d] = r - previous;
            previous = r;
        }
    }

    // Multiplicativity of lifting on reference pairs within budget.
    if (all_found) {
        for (std::size_t i = 0; i < ref_basis.size(); ++i)
            for (std::size_t j = i; j < ref_basis.size(); ++j) {
                if (ref_basis[i].degree() + ref_basis[j].degree() > through_degree) continue;
                const Element product = t.multiply(Element::path_term(ref_basis[i]),
                                                   Element::path_term(ref_basis[j]));
                const CentralLift direct = central_lift(t, reference_vertex, product);
                if (!direct.found) {
                    all_found = false;
                    continue;
                }
                const Element composed = t.multiply(lifts[i].lift, lifts[j].lift);
                if (!(composed == direct.lift)) rep.lifts_multiplicative = false;
            }
    }

    rep.layers_match = all_found && rep.commutant_layers == rep.reference_layers &&
                       rep.lifted_layers == rep.reference_layers;
    if (!all_found)
        rep.verdict = "inconclusive";
    else if (rep.layers_match && rep.lifts_unique && rep.lifts_multiplicative)
        rep.verdict = "holds";
    else
        rep.verdict = "fails";
    return rep;
}

CornerPresentation corner_presentation(const TruncatedQuotient& t, int vertex) {
    const CornerAlgebra corner = t.corner(vertex);
    const int N = t.max_degree();
    const std::vector<Path> basis = corner.basis();
    const int M = static_cast<int>(basis.size());
    std::map<Path, int> cols;
    for (const Path& p : basis) cols.emplace(p, static_cast<int>(cols.size()));
    const auto coords = [&](const Element& x) {
        std::vector<Rational> v(M);
        for (const auto& [p, c] : x.terms()) v[cols.at(p)] = c;
        return v;
    };

    // Incremental row space with reduction against stored echelon rows.
    struct Span {
        std::vector<std::vector<Rational>> rows; // echelon, pivot ascending
        std::vector<int> pivots;
        bool insert(std::vector<Rational> v) {
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (!v[pivots[r]].is_zero()) {
                    const Rational f = v[pivots[r]];
                    for (std::size_t c = 0; c < v.size(); ++c)
                        v[c] = v[c] - f * rows[r][c];
                }
            int pivot = -1;
            for (std::size_t c = 0; c < v.size(); ++c)
                if (!v[c].is_zero()) {
                    pivot = static_cast<int>(c);
                    break;
                }
            if (pivot < 0) return false;
            const Rational inv = Rational(1) / v[pivot];
            for (auto& c : v) c = inv * c;
            rows.push_back(std::move(v));
            pivots.push_back(pivot);
            return true;
        }
        int dim() const { return static_cast<int>(rows.size()); }
    };

    // Subalgebra generated by the chosen generators, tracked as elements so
    // new products can extend it breadth-first.
    const auto closure = [&](const std::vector<Element>& gens) {
        Span span;
        std::vector<Element> pool{Element::vertex_unit(vertex)};
        span.insert(coords(pool[0]));
        for (std::size_t head = 0; head < pool.size(); ++head)
            for (const Element& g : gens) {
                if (pool[head].degree() + g.degree() > N) continue;
                Element next = corner.multiply(pool[head], g);
                if (next.is_zero()) continue;
                if (span.insert(coords(next))) pool.push_back(std::move(next));
            }
        return span;
    };

    CornerPresentation pres;
    std::vector<Element> gens;
    Span span = closure(gens);
    const int full = corner.dim_filtered(N);
    for (const Path& p : basis) {
        if (span.dim() == full) break;
        if (p.is_trivial()) continue;
        std::vector<Rational> v = coords(Element::path_term(p));
        Span probe = span; // cheap at this scale
        if (!probe.insert(std::move(v))) continue;
        gens.push_back(Element::path_term(p));
        pres.generator_degrees.push_back(p.degree());
        span = closure(gens);
    }
    pres.generators = gens;

    const int G = static_cast<int>(gens.size());
    for (int i = 0; i < G && pres.commutative; ++i)
        for (int j = i + 1; j < G && pres.commutative; ++j) {
            if (pres.generator_degrees[i] + pres.generator_degrees[j] > N) continue;
            if (!(corner.multiply(gens[i], gens[j]) == corner.multiply(gens[j], gens[i])))
                pres.commutative = false;
        }

    // Monomials in the generators by ascending weighted degree; the first
    // degree with a dependence yields the relation.
    std::vector<std::pair<int, std::vector<int>>> monomials; // (degree, exponents)
    std::vector<int> expo(G, 0);
    const auto push_all = [&](auto&& self, int pos, int degree) -> void {
        if (pos == G) {
            monomials.emplace_back(degree, expo);
            return;
        }
        for (int e = 0;; ++e) {
            const int d = degree + e * pres.generator_degrees[pos];
            if (d > N) break;
            expo[pos] = e;
            self(self, pos + 1, d);
        }
        expo[pos] = 0;
    };
    push_all(push_all, 0, 0);
    std::stable_sort(monomials.begin(), monomials.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::vector<Rational>> monomial_coords;
    for (const auto& [deg, m] : monomials) {
        Element value = Element::vertex_unit(vertex);
        for (int gidx = 0; gidx < G; ++gidx)
            for (int e = 0; e < m[gidx]; ++e) value = corner.multiply(value, gens[gidx]);
        monomial_coords.push_back(coords(value));
    }

    std::size_t count = 0;
    while (count < monomials.size()) {
        const int level = monomials[count].first;
        std::size_t upto = count;
        while (upto < monomials.size() && monomials[upto].first == level) ++upto;
        QMatrix mat(M, static_cast<int>(upto));
        for (std::size_t c = 0; c < upto; ++c)
            for (int r = 0; r < M; ++r) mat.at(r, static_cast<int>(c)) = monomial_coords[c][r];
        const auto null_vectors = nullspace(mat);
        if (!null_vectors.empty()) {
            const std::vector<Rational>& rel = null_vectors.front();
            int lead = -1;
            for (std::size_t c = 0; c < upto; ++c)
                if (!rel[c].is_zero()) lead = static_cast<int>(c);
            const Rational inv = Rational(1) / rel[lead];
            for (std::size_t c = 0; c < upto; ++c)
                if (!rel[c].is_zero()) pres.relation[monomials[c].second] = inv * rel[c];
            pres.relation_degree = level;
            pres.minimal = true; // earlier levels had full rank
            return pres;
        }
        count = upto;
    }
    throw resource_limit("no relation among the generators within the truncation bound");
}

ChainReport chain_min_poly(const std::vector<Rational>& lambdas) {
    ChainReport rep;
    const int n = static_cast<int>(lambdas.size()) + 1;
    rep.n = n;
    if (n == 1) {
        rep.scalar_algebra = true;
        rep.agree = true;
        return rep;
    }

    std::vector<Rational> factor_roots;
    Rational s(0);
    factor_roots.push_back(-s);
    for (int k = 1; k < n; ++k) {
        s = s + lambdas[n - 1 - k];
        factor_roots.push_back(-s);
    }
    rep.formula = monic_from_roots(factor_roots);

    // One-sided chain relation: the commutators along the chain except the
    // last, which contributes only its backward loop, and no component at
    // the end vertex.
    const Quiver base = chain_quiver(n);
    const DoubleQuiver dq = DoubleQuiver::of(base);
    const Quiver& q = dq.total();
    std::vector<Element> relations;
    for (int v = 0; v + 1 < n; ++v) {
        Element r;
        if (v > 0)
            r += Element::path_term(Path::from_arrows(q, {dq.star(v - 1), v - 1}));
        r -= Element::path_term(Path::from_arrows(q, {v, dq.star(v)}));
        r.add_term(Path::trivial(v), -lambdas[v]);
        relations.push_back(std::move(r));
    }
    TruncatedQuotient::Options opt;
    opt.max_degree = 2 * n;
    const TruncatedQuotient t = TruncatedQuotient::build(q, relations, opt);

    const int top = n - 1;
    const Element y = Element::path_term(Path::from_arrows(q, {dq.star(n - 2), n - 2}));
    const CornerAlgebra corner = t.corner(top);
    const int M = static_cast<int>(corner.basis().size());
    std::vector<std::vector<Rational>> powers;
    Element acc = Element::vertex_unit(top);
    powers.push_back(corner.coordinates(acc));
    for (int k = 1; k <= n; ++k) {
        acc = t.multiply(acc, y);
        powers.push_back(corner.coordinates(acc));
    }
    for (int j = 1; j <= n; ++j) {
        QMatrix mat(M, j);
        for (int c = 0; c < j; ++c)
            for (int r = 0; r < M; ++r) mat.at(r, c) = powers[c][r];
        const LinearSolution sol = solve(mat, powers[j]);
        if (sol.consistent) {
            rep.truncated.assign(j + 1, Rational(0));
            rep.truncated[j] = Rational(1);
            for (int c = 0; c < j; ++c) rep.truncated[c] = -sol.x[c];
            break;
        }
    }
    rep.agree = (rep.truncated == rep.formula);
    return rep;
}

StarPresentationReport verify_star_presentation(const std::vector<std::vector<Rational>>& roots,
                                                const Rational& mu, int max_degree) {
    StarPresentationReport rep;
    rep.roots = roots;
    rep.mu = mu;
    rep.max_degree = max_degree;
    for (const auto& arm : roots)
        if (2 * static_cast<int>(arm.size()) > max_degree)
            throw validation_error("truncation bound too small for an arm polynomial");

    const StarInstance si = star_instance(roots, mu);
    const DoubleQuiver dq = DoubleQuiver::of(si.quiver);
    TruncatedQuotient::Options opt;
    opt.max_degree = max_degree;
    const TruncatedQuotient t = TruncatedQuotient::preprojective(dq, si.weight, opt);
    const int c = si.quiver.vertex_index("c");

    Element sum;
    rep.relations_hold = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const int arrow = si.quiver.arrow_index("a" + std::to_string(i + 1) + ".1");
        const Element y =
            Element::path_term(Path::from_arrows(dq.total(), {dq.star(arrow), arrow}));
        sum += y;
        const std::vector<Rational> poly = monic_from_roots(roots[i]);
        Element residue;
        Element power = Element::vertex_unit(c);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (!poly[k].is_zero()) residue += poly[k] * power;
            if (k + 1 < poly.size()) power = t.multiply(power, y);
        }
        residue = t.normal_form(residue);
        rep.relations_hold = rep.relations_hold && residue.is_zero();
        rep.arm_residues.push_back(std::move(residue));
    }
    sum.add_term(Path::trivial(c), -mu);
    rep.sum_residue = t.normal_form(sum);
    rep.relations_hold = rep.relations_hold && rep.sum_residue.is_zero();

    // One-vertex presentation with a weight-2 loop per arm.
    Quiver lq;
    lq.add_vertex("c");
    for (std::size_t i = 0; i < roots.size(); ++i)
        lq.add_arrow("x" + std::to_string(i + 1), "c", "c", 2);
    std::vector<Element> relations;
    Element balance;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::vector<Rational> poly = monic_from_roots(roots[i]);
        Element rel;
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (poly[k].is_zero()) continue;
            rel.add_term(Path::from_arrows(lq, std::vector<int>(k, static_cast<int>(i))),
                         poly[k]);
        }
        relations.push_back(std::move(rel));
        balance.add_term(Path::from_arrows(lq, {static_cast<int>(i)}), Rational(1));
    }
    balance.add_term(Path::trivial(0), -mu);
    relations.push_back(std::move(balance));
    const TruncatedQuotient ta = TruncatedQuotient::build(lq, relations, opt);

    const DimensionTable corner_table = t.dimension_table();
    const DimensionTable loop_table = ta.dimension_table();
    rep.corner_dims.resize(max_degree + 1);
    rep.loop_dims.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        rep.corner_dims[d] = corner_table.filtered(c, c, d);
        rep.loop_dims[d] = loop_table.filtered(0, 0, d);
    }
    rep.dims_match = (rep.corner_dims == rep.loop_dims);
    rep.verdict = (rep.relations_hold && rep.dims_match) ? "holds" : "fails";
    return rep;
}

} // namespace ppalg
