#include "ppalg/quiver.hpp"

#include "ppalg/errors.hpp"

namespace ppalg {

int Quiver::add_vertex(const std::string& id) {
    if (id.empty()) throw validation_error("vertex id must be nonempty");
    if (vertex_index_.count(id)) throw validation_error("duplicate vertex id \"" + id + "\"");
    vertices_.push_back(id);
    const int idx = static_cast<int>(vertices_.size()) - 1;
    vertex_index_.emplace(id, idx);
    return idx;
}

int Quiver::add_arrow(const std::string& id, const std::string& src, const std::string& tgt,
                      int weight) {
    if (id.empty()) throw validation_error("arrow id must be nonempty");
    if (arrow_index_.count(id)) throw validation_error("duplicate arrow id \"" + id + "\"");
    if (weight < 1) throw validation_error("arrow weight must be positive");
    Arrow a{id, vertex_index(src), vertex_index(tgt), weight};
    arrows_.push_back(std::move(a));
    const int idx = static_cast<int>(arrows_.size()) - 1;
    arrow_index_.emplace(id, idx);
    return idx;
}

std::optional<int> Quiver::find_vertex(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
}

int Quiver::vertex_index(const std::string& id) const {
    auto v = find_vertex(id);
    if (!v) throw validation_error("unknown vertex \"" + id + "\"");
    return *v;
}

int Quiver::arrow_index(const std::string& id) const {
    auto a = find_arrow(id);
    if (!a) throw validation_error("unknown arrow \"" + id + "\"");
    return *a;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> out;
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[a].src == v) out.push_back(a);
    return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
    std::vector<int> out;
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[a].tgt == v) out.push_back(a);
    return out;
}

DoubleQuiver DoubleQuiver::of(const Quiver& base) {
    DoubleQuiver d;
    d.base_ = base;
    d.total_ = base;
    for (const Arrow& a : base.arrows()) {
        const std::string star_id = a.id + "*";
        if (base.find_arrow(star_id))
            throw validation_error("cannot double quiver: arrow id \"" + star_id +
                                   "\" already exists");
        d.total_.add_arrow(star_id, base.vertex_id(a.tgt), base.vertex_id(a.src), a.weight);
    }
    return d;
}

int DoubleQuiver::star(int arrow) const {
    const int n = base_.arrow_count();
    if (arrow < 0 || arrow >= 2 * n) throw validation_error("arrow index out of range");
    return arrow < n ? arrow + n : arrow - n;
}

Weight Weight::zero(const Quiver& q) {
    Weight w;
    w.values_.assign(q.vertex_count(), Rational(0));
    return w;
}

Weight Weight::constant(const Quiver& q, const Rational& c) {
    Weight w;
    w.values_.assign(q.vertex_count(), c);
    return w;
}

Weight Weight::from_map(const Quiver& q, const std::map<std::string, Rational>& values) {
    if (static_cast<int>(values.size()) != q.vertex_count())
        throw validation_error("weight has " + std::to_string(values.size()) +
                               " entries for a quiver with " + std::to_string(q.vertex_count()) +
                               " vertices");
    Weight w = zero(q);
    for (const auto& [id, val] : values) w.values_.at(q.vertex_index(id)) = val;
    return w;
}

Weight Weight::from_values(const Quiver& q, std::vector<Rational> values) {
    if (static_cast<int>(values.size()) != q.vertex_count())
        throw validation_error("weight vector length does not match vertex count");
    Weight w;
    w.values_ = std::move(values);
    return w;
}

Rational pairing(const Weight& w, const std::vector<long>& multiplicity) {
    if (w.size() != static_cast<int>(multiplicity.size()))
        throw validation_error("pairing requires matching vertex sets");
    Rational sum;
    for (int v = 0; v < w.size(); ++v) sum += w.at(v) * Rational(multiplicity[v]);
    return sum;
}

} // namespace ppalg
