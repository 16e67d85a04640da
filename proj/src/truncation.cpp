#include "ppalg/truncation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "ppalg/errors.hpp"

namespace ppalg {

long DimensionTable::filtered(int src, int tgt, int through_degree) const {
    long sum = 0;
    for (int d = 0; d <= std::min(through_degree, maxdeg_); ++d) sum += at(src, tgt, d);
    return sum;
}

long DimensionTable::total() const {
    long sum = 0;
    for (long v : data_) sum += v;
    return sum;
}

std::optional<DimensionTable::Entry> DimensionTable::first_difference(const DimensionTable& a,
                                                                      const DimensionTable& b) {
    if (a.nv_ != b.nv_ || a.maxdeg_ != b.maxdeg_) return Entry{-1, -1, -1, 0, 0};
    for (int s = 0; s < a.nv_; ++s)
        for (int t = 0; t < a.nv_; ++t)
            for (int d = 0; d <= a.maxdeg_; ++d)
                if (a.at(s, t, d) != b.at(s, t, d))
                    return Entry{s, t, d, a.at(s, t, d), b.at(s, t, d)};
    return std::nullopt;
}

namespace {

struct TermRef {
    std::int32_t path;
    Rational coeff;
};

// Sorted descending by the engine's monomial order.
using Row = std::vector<TermRef>;

} // namespace

struct TruncatedQuotient::Impl {
    Quiver quiver;
    Options opt;
    std::optional<Weight> weight;
    int nv = 0;

    std::vector<Path> pool;

    struct PHash {
        const std::vector<Path>* pool;
        using is_transparent = void;
        static std::size_t hash_path(const Path& p) {
            std::uint64_t h = 1469598103934665603ull;
            auto mix = [&h](std::uint64_t x) {
                h ^= x;
                h *= 1099511628211ull;
            };
            mix(static_cast<std::uint64_t>(p.source()) + 1);
            for (auto a : p.arrows()) mix(static_cast<std::uint64_t>(a) + 0x100);
            return static_cast<std::size_t>(h);
        }
        std::size_t operator()(std::int32_t id) const { return hash_path((*pool)[id]); }
        std::size_t operator()(const Path& p) const { return hash_path(p); }
    };
    struct PEq {
        const std::vector<Path>* pool;
        using is_transparent = void;
        bool operator()(std::int32_t a, std::int32_t b) const { return a == b; }
        bool operator()(std::int32_t a, const Path& p) const { return (*pool)[a] == p; }
        bool operator()(const Path& p, std::int32_t a) const { return (*pool)[a] == p; }
    };
    std::unordered_set<std::int32_t, PHash, PEq> index;

    // precedence[arrow] orders arrows inside the lexicographic comparison.
    std::vector<std::int32_t> precedence;

    struct Rule {
        std::int32_t head;
        Row nf; // what the head equals; supported on standard paths
    };
    std::vector<Rule> rules;
    std::unordered_map<std::int32_t, std::int32_t> rule_of;
    std::vector<std::vector<std::int32_t>> rules_by_block;

    std::vector<std::vector<Path>> standard_by_block;
    std::uint64_t work = 0;

    explicit Impl(const Quiver& q, const Options& o)
        : quiver(q), opt(o), nv(q.vertex_count()),
          index(64, PHash{&pool}, PEq{&pool}) {
        if (o.max_degree < 0) throw validation_error("truncation degree must be >= 0");
        if (o.max_paths < 1) throw validation_error("path budget must be positive");
        const int na = q.arrow_count();
        precedence.resize(na);
        for (int a = 0; a < na; ++a) precedence[a] = o.reverse_arrow_order ? na - 1 - a : a;
        rules_by_block.resize(static_cast<std::size_t>(nv) * nv);
    }

    std::int32_t intern(const Path& p) {
        if (auto it = index.find(p); it != index.end()) return *it;
        if (pool.size() >= opt.max_paths)
            throw resource_limit("path budget of " + std::to_string(opt.max_paths) + " exceeded");
        pool.push_back(p);
        const auto id = static_cast<std::int32_t>(pool.size() - 1);
        index.insert(id);
        return id;
    }

    bool less(std::int32_t a, std::int32_t b) const {
        const Path& pa = pool[a];
        const Path& pb = pool[b];
        if (pa.degree() != pb.degree()) return pa.degree() < pb.degree();
        if (pa.length() != pb.length()) return pa.length() < pb.length();
        const auto& xa = pa.arrows();
        const auto& xb = pb.arrows();
        for (std::size_t i = 0; i < xa.size(); ++i)
            if (precedence[xa[i]] != precedence[xb[i]])
                return precedence[xa[i]] < precedence[xb[i]];
        return pa.source() < pb.source();
    }

    void sort_row(Row& r) const {
        std::sort(r.begin(), r.end(),
                  [this](const TermRef& x, const TermRef& y) { return less(y.path, x.path); });
    }

    // Collapses a descending-sorted term list with possible repeats.
    static Row merge_sorted(Row gathered) {
        Row out;
        out.reserve(gathered.size());
        for (auto& t : gathered) {
            if (!out.empty() && out.back().path == t.path) out.back().coeff += t.coeff;
            else out.push_back(std::move(t));
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        }
        return out;
    }

    // One-pass reduction: every rule head is replaced by its (standard)
    // normal form, standard terms pass through.
    Row reduce(const Row& in) {
        Row gathered;
        gathered.reserve(in.size());
        for (const TermRef& t : in) {
            auto r = rule_of.find(t.path);
            if (r == rule_of.end()) {
                gathered.push_back(t);
            } else {
                for (const TermRef& nt : rules[r->second].nf)
                    gathered.push_back({nt.path, t.coeff * nt.coeff});
            }
        }
        work += in.size() + gathered.size();
        sort_row(gathered);
        return merge_sorted(std::move(gathered));
    }

    // base + c * add, both descending-sorted.
    Row merge_scaled(const Row& base, const Row& add, const Rational& c) {
        Row out;
        out.reserve(base.size() + add.size());
        std::size_t i = 0, j = 0;
        while (i < base.size() || j < add.size()) {
            bool take_base;
            if (i == base.size()) take_base = false;
            else if (j == add.size()) take_base = true;
            else if (base[i].path == add[j].path) {
                Rational v = base[i].coeff;
                v.add_mul(c, add[j].coeff);
                if (!v.is_zero()) out.push_back({base[i].path, std::move(v)});
                ++i;
                ++j;
                continue;
            } else {
                take_base = less(add[j].path, base[i].path);
            }
            if (take_base) out.push_back(base[i++]);
            else out.push_back({add[j].path, c * add[j].coeff});
            if (!take_base) ++j;
        }
        work += out.size();
        return out;
    }

    int block_of(std::int32_t id) const {
        const Path& p = pool[id];
        return p.source() * nv + p.target();
    }

    void insert_rule(std::int32_t head, Row nf) {
        if (rule_of.count(head)) throw error("internal: duplicate rule head");
        const int blk = block_of(head);
        const auto idx = static_cast<std::int32_t>(rules.size());
        rules.push_back({head, std::move(nf)});
        rule_of.emplace(head, idx);
        // Keep every older rule's normal form standard: substitute the new
        // head wherever it appears.
        for (std::int32_t other : rules_by_block[blk]) {
            Row& tail = rules[other].nf;
            auto it = std::lower_bound(tail.begin(), tail.end(), head,
                                       [this](const TermRef& t, std::int32_t h) {
                                           return less(h, t.path);
                                       });
            if (it == tail.end() || it->path != head) continue;
            const Rational c = it->coeff;
            tail.erase(it);
            tail = merge_scaled(tail, rules[idx].nf, c);
        }
        rules_by_block[blk].push_back(idx);
    }

    bool is_pivot(const Path& p) const {
        auto it = index.find(p);
        return it != index.end() && rule_of.count(*it) > 0;
    }

    void enumerate_standard() {
        const int N = opt.max_degree;
        standard_by_block.assign(static_cast<std::size_t>(nv) * nv, {});
        std::vector<std::vector<Path>> by_deg(N + 1);
        for (int v = 0; v < nv; ++v) {
            Path e = Path::trivial(v);
            if (!is_pivot(e)) by_deg[0].push_back(e);
        }
        for (int d = 1; d <= N; ++d) {
            for (int a = 0; a < quiver.arrow_count(); ++a) {
                const Arrow& ar = quiver.arrow(a);
                const int prev = d - ar.weight;
                if (prev < 0) continue;
                for (const Path& p : by_deg[prev]) {
                    if (p.target() != ar.src) continue;
                    Path ext = *p.before(quiver, a);
                    if (!is_pivot(ext)) by_deg[d].push_back(std::move(ext));
                }
            }
        }
        for (auto& layer : by_deg)
            for (Path& p : layer)
                standard_by_block[p.source() * nv + p.target()].push_back(std::move(p));
        for (auto& bucket : standard_by_block)
            std::sort(bucket.begin(), bucket.end());
    }

    Element materialize(const Row& r) const {
        Element e;
        for (const TermRef& t : r) e.add_term(pool[t.path], t.coeff);
        return e;
    }

    void check_path(const Path& p) const {
        if (p.source() < 0 || p.source() >= nv || p.target() < 0 || p.target() >= nv)
            throw validation_error("path endpoints do not belong to this quiver");
        for (auto a : p.arrows())
            if (a < 0 || a >= quiver.arrow_count())
                throw validation_error("path uses arrows outside this quiver");
    }

    // Groups an element's terms by (source, target) block, descending-sorted.
    std::vector<Row> block_rows(const Element& e) {
        std::map<int, Row> by_block;
        for (const auto& [p, c] : e.terms()) {
            check_path(p);
            const std::int32_t id = intern(p);
            by_block[block_of(id)].push_back({id, c});
        }
        std::vector<Row> out;
        out.reserve(by_block.size());
        for (auto& kv : by_block) {
            sort_row(kv.second);
            out.push_back(std::move(kv.second));
        }
        return out;
    }
};

TruncatedQuotient TruncatedQuotient::build(const Quiver& q, const std::vector<Element>& relations,
                                           const Options& opt) {
    auto impl = std::make_shared<Impl>(q, opt);
    const int N = opt.max_degree;

    std::map<int, std::deque<Row>> pending;
    for (const Element& rel : relations) {
        for (Row& row : impl->block_rows(rel)) {
            const int top = impl->pool[row.front().path].degree();
            if (top > N)
                throw validation_error("relation of degree " + std::to_string(top) +
                                       " exceeds truncation degree " + std::to_string(N));
            pending[top].push_back(std::move(row));
        }
    }

    for (int d = 0; d <= N; ++d) {
        auto stage = pending.find(d);
        if (stage == pending.end()) continue;
        std::deque<Row>& queue = stage->second;
        while (!queue.empty()) {
            Row row = std::move(queue.front());
            queue.pop_front();
            Row red = impl->reduce(row);
            if (red.empty()) continue;

            const Rational lead = red.front().coeff;
            if (!lead.is_one()) {
                const Rational inv = lead.inverse();
                for (TermRef& t : red) t.coeff *= inv;
            }
            const std::int32_t head = red.front().path;
            Row nf(red.begin() + 1, red.end());
            for (TermRef& t : nf) t.coeff = -t.coeff;
            impl->insert_rule(head, std::move(nf));

            // The snapshot of this row seeds the next stages: multiply by
            // every composable arrow on both sides.
            const Path& head_path = impl->pool[head];
            const int lead_deg = head_path.degree();
            const int src = head_path.source();
            const int tgt = head_path.target();
            for (int a = 0; a < q.arrow_count(); ++a) {
                const Arrow& ar = q.arrow(a);
                if (lead_deg + ar.weight > N) continue;
                const int target_stage = std::max(lead_deg + ar.weight, d);
                if (ar.src == tgt) { // arrow acts after the row's paths
                    Row prod;
                    prod.reserve(red.size());
                    for (const TermRef& t : red)
                        prod.push_back({impl->intern(*impl->pool[t.path].before(q, a)), t.coeff});
                    pending[target_stage].push_back(std::move(prod));
                }
                if (ar.tgt == src) { // arrow acts before the row's paths
                    Row prod;
                    prod.reserve(red.size());
                    for (const TermRef& t : red)
                        prod.push_back({impl->intern(*impl->pool[t.path].after(q, a)), t.coeff});
                    pending[target_stage].push_back(std::move(prod));
                }
            }
        }
    }

    impl->enumerate_standard();
    TruncatedQuotient t;
    t.impl_ = std::move(impl);
    return t;
}

TruncatedQuotient TruncatedQuotient::preprojective(const DoubleQuiver& dq, const Weight& lambda,
                                                   const Options& opt) {
    std::vector<Element> components = preprojective_relation_components(dq, lambda);
    TruncatedQuotient t = build(dq.total(), components, opt);
    t.impl_->weight = lambda;
    return t;
}

const Quiver& TruncatedQuotient::quiver() const { return impl_->quiver; }
int TruncatedQuotient::max_degree() const { return impl_->opt.max_degree; }
const TruncatedQuotient::Options& TruncatedQuotient::options() const { return impl_->opt; }
const std::optional<Weight>& TruncatedQuotient::weight() const { return impl_->weight; }
std::size_t TruncatedQuotient::rule_count() const { return impl_->rules.size(); }
std::uint64_t TruncatedQuotient::work_counter() const { return impl_->work; }

Element TruncatedQuotient::normal_form(const Element& x) const {
    const Impl& impl = *impl_;
    Element out;
    for (const auto& [p, c] : x.terms()) {
        impl.check_path(p);
        if (p.degree() > impl.opt.max_degree)
            throw degree_overflow("path degree " + std::to_string(p.degree()) +
                                  " exceeds truncation degree " +
                                  std::to_string(impl.opt.max_degree));
        auto it = impl.index.find(p);
        if (it != impl.index.end()) {
            if (auto r = impl.rule_of.find(*it); r != impl.rule_of.end()) {
                for (const TermRef& t : impl.rules[r->second].nf)
                    out.add_term(impl.pool[t.path], c * t.coeff);
                continue;
            }
        }
        out.add_term(p, c);
    }
    return out;
}

Element TruncatedQuotient::multiply(const Element& x, const Element& y) const {
    if (!x.is_zero() && !y.is_zero() && x.degree() + y.degree() > impl_->opt.max_degree)
        throw degree_overflow("product degree " + std::to_string(x.degree() + y.degree()) +
                              " exceeds truncation degree " +
                              std::to_string(impl_->opt.max_degree));
    return normal_form(x.mul(y));
}

const std::vector<Path>& TruncatedQuotient::standard_paths(int src, int tgt) const {
    const Impl& impl = *impl_;
    if (src < 0 || src >= impl.nv || tgt < 0 || tgt >= impl.nv)
        throw validation_error("vertex index out of range");
    return impl.standard_by_block[static_cast<std::size_t>(src) * impl.nv + tgt];
}

DimensionTable TruncatedQuotient::dimension_table() const {
    const Impl& impl = *impl_;
    DimensionTable table(impl.nv, impl.opt.max_degree);
    for (int s = 0; s < impl.nv; ++s)
        for (int t = 0; t < impl.nv; ++t)
            for (const Path& p : impl.standard_by_block[static_cast<std::size_t>(s) * impl.nv + t])
                ++table.at(s, t, p.degree());
    return table;
}

CornerAlgebra TruncatedQuotient::corner(int vertex) const {
    CornerAlgebra c;
    c.parent_ = *this;
    c.vertex_ = vertex;
    c.basis_ = standard_paths(vertex, vertex);
    return c;
}

std::vector<std::pair<Path, Element>> TruncatedQuotient::export_rules() const {
    const Impl& impl = *impl_;
    std::vector<std::pair<Path, Element>> out;
    out.reserve(impl.rules.size());
    for (const auto& rule : impl.rules)
        out.emplace_back(impl.pool[rule.head], impl.materialize(rule.nf));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

TruncatedQuotient TruncatedQuotient::restore(const Quiver& q, const Options& opt,
                                             std::optional<Weight> lambda,
                                             const std::vector<std::pair<Path, Element>>& rules) {
    auto impl = std::make_shared<Impl>(q, opt);
    impl->weight = std::move(lambda);
    // First pass: register heads so standardness checks can see all of them.
    for (const auto& [head, nf] : rules) {
        impl->check_path(head);
        if (head.degree() > opt.max_degree)
            throw validation_error("stored rule head exceeds the truncation degree");
        const std::int32_t id = impl->intern(head);
        if (impl->rule_of.count(id)) throw validation_error("duplicate stored rule head");
        const auto idx = static_cast<std::int32_t>(impl->rules.size());
        impl->rules.push_back({id, {}});
        impl->rule_of.emplace(id, idx);
        impl->rules_by_block[impl->block_of(id)].push_back(idx);
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& [head, nf] = rules[i];
        const std::int32_t head_id = impl->rules[i].head;
        Row row;
        for (const auto& [p, c] : nf.terms()) {
            impl->check_path(p);
            const std::int32_t id = impl->intern(p);
            if (impl->block_of(id) != impl->block_of(head_id))
                throw validation_error("stored rule mixes vertex blocks");
            if (impl->rule_of.count(id))
                throw validation_error("stored rule tail contains a rule head");
            if (!impl->less(id, head_id))
                throw validation_error("stored rule tail is not below its head");
            row.push_back({id, c});
        }
        impl->sort_row(row);
        impl->rules[i].nf = std::move(row);
    }
    impl->enumerate_standard();
    TruncatedQuotient t;
    t.impl_ = std::move(impl);
    return t;
}

std::vector<Path> CornerAlgebra::basis_up_to(int degree) const {
    std::vector<Path> out;
    for (const Path& p : basis_) {
        if (p.degree() > degree) break;
        out.push_back(p);
    }
    return out;
}

int CornerAlgebra::dim_filtered(int degree) const {
    int n = 0;
    for (const Path& p : basis_) {
        if (p.degree() > degree) break;
        ++n;
    }
    return n;
}

int CornerAlgebra::dim_layer(int degree) const {
    int n = 0;
    for (const Path& p : basis_) {
        if (p.degree() > degree) break;
        if (p.degree() == degree) ++n;
    }
    return n;
}

Element CornerAlgebra::multiply(const Element& x, const Element& y) const {
    return parent_.multiply(x, y);
}

std::vector<Rational> CornerAlgebra::coordinates(const Element& x) const {
    std::vector<Rational> coords(basis_.size());
    for (const auto& [p, c] : x.terms()) {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), p);
        if (it == basis_.end() || !(*it == p))
            throw validation_error("element is not supported on the corner basis");
        coords[static_cast<std::size_t>(it - basis_.begin())] = c;
    }
    return coords;
}

Element CornerAlgebra::from_coordinates(const std::vector<Rational>& coords) const {
    if (coords.size() != basis_.size())
        throw validation_error("coordinate vector length does not match the corner basis");
    Element e;
    for (std::size_t i = 0; i < coords.size(); ++i) e.add_term(basis_[i], coords[i]);
    return e;
}

WeightSweepReport lambda_independence_check(const DoubleQuiver& dq,
                                            const std::vector<Weight>& weights,
                                            const TruncatedQuotient::Options& opt) {
    WeightSweepReport report;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        TruncatedQuotient t = TruncatedQuotient::preprojective(dq, weights[i], opt);
        report.tables.push_back(t.dimension_table());
        if (i > 0 && report.all_equal) {
            if (auto diff = DimensionTable::first_difference(report.tables[0], report.tables[i])) {
                report.all_equal = false;
                report.mismatched_sample = static_cast<int>(i);
                report.mismatch = diff;
            }
        }
    }
    return report;
}

} // namespace ppalg
