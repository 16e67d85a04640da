#include "ppalg/pathalg.hpp"

#include <sstream>

#include "ppalg/errors.hpp"

namespace ppalg {

Path Path::from_arrows(const Quiver& q, const std::vector<int>& arrows) {
    if (arrows.empty()) throw validation_error("empty arrow list; use Path::trivial");
    int degree = 0;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = q.arrow(arrows[i]);
        degree += a.weight;
        if (i + 1 < arrows.size() && a.tgt != q.arrow(arrows[i + 1]).src)
            throw validation_error("arrows \"" + a.id + "\" and \"" + q.arrow(arrows[i + 1]).id +
                                   "\" do not compose");
    }
    std::vector<std::int32_t> seq(arrows.begin(), arrows.end());
    return Path(q.arrow(arrows.front()).src, q.arrow(arrows.back()).tgt, degree, std::move(seq));
}

std::optional<Path> Path::after(const Quiver& q, int arrow) const {
    const Arrow& a = q.arrow(arrow);
    if (a.tgt != src_) return std::nullopt;
    std::vector<std::int32_t> seq;
    seq.reserve(arrows_.size() + 1);
    seq.push_back(arrow);
    seq.insert(seq.end(), arrows_.begin(), arrows_.end());
    return Path(a.src, tgt_, degree_ + a.weight, std::move(seq));
}

std::optional<Path> Path::before(const Quiver& q, int arrow) const {
    const Arrow& a = q.arrow(arrow);
    if (a.src != tgt_) return std::nullopt;
    std::vector<std::int32_t> seq = arrows_;
    seq.push_back(arrow);
    return Path(src_, a.tgt, degree_ + a.weight, std::move(seq));
}

std::strong_ordering Path::operator<=>(const Path& o) const {
    if (auto c = degree_ <=> o.degree_; c != 0) return c;
    if (auto c = arrows_.size() <=> o.arrows_.size(); c != 0) return c;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (auto c = arrows_[i] <=> o.arrows_[i]; c != 0) return c;
    return src_ <=> o.src_;
}

std::string Path::str(const Quiver& q) const {
    if (arrows_.empty()) return "e_" + q.vertex_id(src_);
    std::string out;
    for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
        if (!out.empty()) out += " ";
        out += q.arrow(*it).id;
    }
    return out;
}

std::optional<Path> concat(const Path& p, const Path& q) {
    if (q.target() != p.source()) return std::nullopt;
    if (q.is_trivial()) return p;
    if (p.is_trivial()) return q;
    std::vector<std::int32_t> seq = q.arrows_;
    seq.insert(seq.end(), p.arrows_.begin(), p.arrows_.end());
    return Path(q.src_, p.tgt_, p.degree_ + q.degree_, std::move(seq));
}

Element Element::path_term(const Path& p, const Rational& c) {
    Element e;
    e.add_term(p, c);
    return e;
}

Element Element::unit(const Quiver& q) {
    Element e;
    for (int v = 0; v < q.vertex_count(); ++v) e.add_term(Path::trivial(v), Rational(1));
    return e;
}

int Element::degree() const {
    int d = 0;
    for (const auto& [p, c] : terms_) d = std::max(d, p.degree());
    return d;
}

Rational Element::coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Path& p, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element Element::operator-() const {
    Element e;
    for (const auto& [p, c] : terms_) e.terms_.emplace(p, -c);
    return e;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

Element operator*(const Rational& c, Element e) {
    if (c.is_zero()) return Element::zero();
    for (auto& [p, v] : e.terms_) v *= c;
    return e;
}

Element Element::mul(const Element& o) const {
    Element out;
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_)
            if (auto pq = concat(p, q)) out.add_term(*pq, c * d);
    return out;
}

Element Element::corner(int src, int tgt) const {
    Element out;
    for (const auto& [p, c] : terms_)
        if (p.source() == src && p.target() == tgt) out.terms_.emplace(p, c);
    return out;
}

Element Element::homogeneous_part(int d) const {
    Element out;
    for (const auto& [p, c] : terms_)
        if (p.degree() == d) out.terms_.emplace(p, c);
    return out;
}

std::string Element::str(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational abs = c.sign() < 0 ? -c : c;
        if (!abs.is_one()) os << abs.str() << " ";
        os << p.str(q);
    }
    return os.str();
}

Element preprojective_relation(const DoubleQuiver& dq, const Weight& lambda) {
    Element r;
    for (const Element& component : preprojective_relation_components(dq, lambda)) r += component;
    return r;
}

std::vector<Element> preprojective_relation_components(const DoubleQuiver& dq,
                                                       const Weight& lambda) {
    const Quiver& q = dq.total();
    if (lambda.size() != q.vertex_count())
        throw validation_error("weight does not match the quiver's vertex set");
    std::vector<Element> out(q.vertex_count());
    for (int k = 0; k < dq.base_arrow_count(); ++k) {
        const int ks = dq.star(k);
        const Arrow& a = q.arrow(k);
        // a a* is the cycle at target(a); a* a is the cycle at source(a).
        out[a.tgt].add_term(Path::from_arrows(q, {ks, k}), Rational(1));
        out[a.src].add_term(Path::from_arrows(q, {k, ks}), Rational(-1));
    }
    for (int v = 0; v < q.vertex_count(); ++v)
        out[v].add_term(Path::trivial(v), -lambda.at(v));
    return out;
}

} // namespace ppalg
