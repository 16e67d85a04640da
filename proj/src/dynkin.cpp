#include "ppalg/dynkin.hpp"

#include <algorithm>
#include <numeric>

#include "ppalg/errors.hpp"

namespace ppalg {

namespace {

// 2*delta_i must equal the sum of delta over neighbours, counted with edge
// multiplicity, and the extending vertex must have delta 1.
void validate_model(const DynkinModel& m) {
    const Quiver& q = m.quiver;
    std::vector<long> nbr(q.vertex_count(), 0);
    for (const Arrow& a : q.arrows()) {
        nbr[a.src] += m.delta[a.tgt];
        nbr[a.tgt] += m.delta[a.src];
    }
    for (int v = 0; v < q.vertex_count(); ++v)
        if (2 * m.delta[v] != nbr[v])
            throw error("internal: catalog entry " + m.label + " fails the harmonic condition");
    if (m.delta[m.extending] != 1)
        throw error("internal: catalog entry " + m.label + " has a bad extending vertex");
}

DynkinModel build_affine_a(int n) {
    DynkinModel m;
    m.label = "A~" + std::to_string(n);
    for (int v = 0; v <= n; ++v) m.quiver.add_vertex(std::to_string(v));
    for (int v = 0; v <= n; ++v)
        m.quiver.add_arrow("a" + std::to_string(v), std::to_string(v),
                           std::to_string((v + 1) % (n + 1)));
    m.delta.assign(n + 1, 1);
    return m;
}

DynkinModel build_affine_d(int n) {
    DynkinModel m;
    m.label = "D~" + std::to_string(n);
    for (int v = 0; v <= n; ++v) m.quiver.add_vertex(std::to_string(v));
    auto arrow = [&](int src, int tgt) {
        m.quiver.add_arrow("a" + std::to_string(src), std::to_string(src), std::to_string(tgt));
    };
    // Leaves 0, 1 hang off vertex 2; a chain runs 2 .. n-2; leaves n-1, n
    // hang off vertex n-2.  All arrows point one step toward vertex 0.
    arrow(1, 2);
    arrow(2, 0);
    for (int v = 3; v <= n - 2; ++v) arrow(v, v - 1);
    arrow(n - 1, n - 2);
    arrow(n, n - 2);
    m.delta.assign(n + 1, 2);
    m.delta[0] = m.delta[1] = m.delta[n - 1] = m.delta[n] = 1;
    return m;
}

DynkinModel build_affine_e(int rank) {
    DynkinModel m;
    m.label = "E~" + std::to_string(rank);
    std::vector<long> delta;
    int branch_src = 0, branch_tgt = 0, chain_len = 0;
    switch (rank) {
    case 6:
        // 0-1-2-3-4 with branch 2-5-6.
        delta = {1, 2, 3, 2, 1, 2, 1};
        chain_len = 4;
        branch_src = 5;
        branch_tgt = 2;
        break;
    case 7:
        // 0-1-2-3-4-5-6 with branch 3-7.
        delta = {1, 2, 3, 4, 3, 2, 1, 2};
        chain_len = 6;
        branch_src = 7;
        branch_tgt = 3;
        break;
    case 8:
        // 0-1-2-3-4-5-6-7 with branch 5-8.
        delta = {1, 2, 3, 4, 5, 6, 4, 2, 3};
        chain_len = 7;
        branch_src = 8;
        branch_tgt = 5;
        break;
    default:
        throw validation_error("unknown catalog label E~" + std::to_string(rank));
    }
    for (std::size_t v = 0; v < delta.size(); ++v) m.quiver.add_vertex(std::to_string(v));
    for (int v = 1; v <= chain_len; ++v)
        m.quiver.add_arrow("a" + std::to_string(v), std::to_string(v), std::to_string(v - 1));
    m.quiver.add_arrow("a" + std::to_string(branch_src), std::to_string(branch_src),
                       std::to_string(branch_tgt));
    if (rank == 6) {
        // Second branch vertex 6 sits past 5.
        m.quiver.add_arrow("a6", "6", "5");
    }
    m.delta = std::move(delta);
    return m;
}

} // namespace

std::optional<int> DynkinModel::center_vertex() const {
    const long best = *std::max_element(delta.begin(), delta.end());
    int where = -1;
    for (int v = 0; v < static_cast<int>(delta.size()); ++v) {
        if (delta[v] != best) continue;
        if (where >= 0) return std::nullopt;
        where = v;
    }
    return where;
}

DynkinModel dynkin_catalog(const std::string& label) {
    const auto tilde = label.find('~');
    if (tilde == std::string::npos || tilde != 1)
        throw validation_error("unknown catalog label \"" + label + "\"");
    const char family = label[0];
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(label.substr(2), &used);
        if (used != label.size() - 2) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
        throw validation_error("unknown catalog label \"" + label + "\"");
    }

    DynkinModel m;
    switch (family) {
    case 'A':
        if (n == 0)
            throw validation_error(
                "A~0 (one vertex with a loop) is outside the supported catalog");
        if (n < 1) throw validation_error("unknown catalog label \"" + label + "\"");
        m = build_affine_a(n);
        break;
    case 'D':
        if (n < 4) throw validation_error("D~n requires n >= 4");
        m = build_affine_d(n);
        break;
    case 'E':
        m = build_affine_e(n);
        break;
    default:
        throw validation_error("unknown catalog label \"" + label + "\"");
    }
    validate_model(m);
    return m;
}

Quiver star_quiver(const std::vector<int>& degrees) {
    if (degrees.empty()) throw validation_error("star quiver needs at least one arm");
    Quiver q;
    q.add_vertex("c");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 2)
            throw validation_error("star arm degrees must be >= 2, got " +
                                   std::to_string(degrees[i]));
        const std::string arm = std::to_string(i + 1);
        for (int j = 1; j < degrees[i]; ++j) q.add_vertex(arm + "." + std::to_string(j));
        for (int j = 1; j < degrees[i]; ++j) {
            const std::string src = arm + "." + std::to_string(j);
            const std::string tgt = j == 1 ? std::string("c") : arm + "." + std::to_string(j - 1);
            q.add_arrow("a" + src, src, tgt);
        }
    }
    return q;
}

StarInstance star_instance(const std::vector<std::vector<Rational>>& roots, const Rational& mu) {
    std::vector<int> degrees;
    for (const auto& arm : roots) {
        if (arm.size() < 2)
            throw validation_error("each root list needs at least two entries");
        if (!arm.front().is_zero())
            throw validation_error("the first root of every arm must be 0");
        degrees.push_back(static_cast<int>(arm.size()));
    }
    StarInstance inst;
    inst.quiver = star_quiver(degrees);
    inst.degrees = std::move(degrees);
    std::vector<Rational> values(inst.quiver.vertex_count());
    values[0] = mu;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::string arm = std::to_string(i + 1);
        for (std::size_t j = 1; j < roots[i].size(); ++j) {
            const int v = inst.quiver.vertex_index(arm + "." + std::to_string(j));
            values[v] = roots[i][j - 1] - roots[i][j];
        }
    }
    inst.weight = Weight::from_values(inst.quiver, std::move(values));
    return inst;
}

Quiver chain_quiver(int n) {
    if (n < 1) throw validation_error("chain length must be >= 1");
    Quiver q;
    for (int v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
    for (int v = 1; v < n; ++v)
        q.add_arrow("a" + std::to_string(v), std::to_string(v), std::to_string(v + 1));
    return q;
}

LabeledGraph underlying_graph(const Quiver& q) {
    LabeledGraph g;
    g.n = q.vertex_count();
    g.adj.assign(g.n, std::vector<int>(g.n, 0));
    for (const Arrow& a : q.arrows()) {
        g.adj[a.src][a.tgt] += 1;
        if (a.src != a.tgt) g.adj[a.tgt][a.src] += 1;
    }
    return g;
}

namespace {

bool extend_iso(const LabeledGraph& a, const LabeledGraph& b, std::vector<int>& map,
                std::vector<bool>& used, int next) {
    if (next == a.n) return true;
    for (int cand = 0; cand < b.n; ++cand) {
        if (used[cand]) continue;
        if (!a.label.empty() && a.label[next] != b.label[cand]) continue;
        if (a.root >= 0 && ((next == a.root) != (cand == b.root))) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            ok = a.adj[next][prev] == b.adj[cand][map[prev]];
        if (ok && a.adj[next][next] != b.adj[cand][cand]) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_iso(a, b, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_graph_isomorphism(const LabeledGraph& a,
                                                       const LabeledGraph& b) {
    if (a.n != b.n) return std::nullopt;
    if (a.label.empty() != b.label.empty()) return std::nullopt;
    if ((a.root >= 0) != (b.root >= 0)) return std::nullopt;
    std::vector<int> map(a.n, -1);
    std::vector<bool> used(b.n, false);
    if (!extend_iso(a, b, map, used, 0)) return std::nullopt;
    return map;
}

} // namespace ppalg
