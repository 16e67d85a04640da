#include "ppalg/equivariant.hpp"

#include "ppalg/dynkin.hpp"
#include "ppalg/errors.hpp"

namespace ppalg {

Rational WeightMonomial::eval(const Rational& x1, const Rational& x2) const {
    Rational out(1);
    for (int k = 0; k < u_pow; ++k) out = out * x1;
    for (int k = 0; k < v_pow; ++k) out = out * x2;
    return out;
}

std::string WeightMonomial::str() const {
    if (u_pow == 0 && v_pow == 0) return "1";
    std::string out;
    const auto piece = [&](char letter, int power) {
        if (power == 0) return;
        if (!out.empty()) out += ' ';
        out += letter;
        if (power > 1) out += '^' + std::to_string(power);
    };
    piece('u', u_pow);
    piece('v', v_pow);
    return out;
}

CyclicEquivariantModel::CyclicEquivariantModel(int order)
    : n_(order),
      dq_(DoubleQuiver::of(
          [&] {
              if (order < 2)
                  throw validation_error(
                      "cyclic equivariant model needs order at least 2, got " +
                      std::to_string(order));
              return dynkin_catalog("A~" + std::to_string(order - 1)).quiver;
          }())) {}

void CyclicEquivariantModel::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw validation_error("vertex " + std::to_string(v) + " outside 0.." +
                               std::to_string(n_ - 1));
}

std::vector<WeightMonomial> CyclicEquivariantModel::basis(int source, int target,
                                                          int degree) const {
    check_vertex(source);
    check_vertex(target);
    if (degree < 0) throw validation_error("negative degree");
    std::vector<WeightMonomial> out;
    for (int p = degree; p >= 0; --p) {
        const int q = degree - p;
        // u^p v^q is equivariant for V_source -> V_target iff
        // p - q = target - source mod n.
        if (((p - q - target + source) % n_ + n_) % n_ == 0)
            out.push_back(WeightMonomial{p, q});
    }
    return out;
}

long CyclicEquivariantModel::dimension(int source, int target, int degree) const {
    return static_cast<long>(basis(source, target, degree).size());
}

char CyclicEquivariantModel::letter(int arrow) const {
    if (arrow < 0 || arrow >= dq_.total().arrow_count())
        throw validation_error("arrow index outside the model quiver");
    return dq_.is_starred(arrow) ? 'v' : 'u';
}

std::string CyclicEquivariantModel::word(const Path& p) const {
    std::string out;
    for (auto it = p.arrows().rbegin(); it != p.arrows().rend(); ++it)
        out += letter(*it);
    return out;
}

std::map<std::string, Rational> CyclicEquivariantModel::moment_defect(int vertex) const {
    check_vertex(vertex);
    const std::vector<Element> components =
        preprojective_relation_components(dq_, Weight::zero(dq_.total()));
    std::map<std::string, Rational> defect;
    const auto add = [&](const std::string& w, const Rational& c) {
        const Rational sum = defect[w] + c;
        if (sum.is_zero())
            defect.erase(w);
        else
            defect[w] = sum;
    };
    for (const auto& [path, coeff] : components.at(vertex).terms())
        add(word(path), coeff);
    // delta_i = 1 for every character, and omega = u(x)v - v(x)u.
    add("uv", Rational(-1));
    add("vu", Rational(1));
    return defect;
}

bool CyclicEquivariantModel::moment_identity_holds() const {
    for (int v = 0; v < n_; ++v)
        if (!moment_defect(v).empty()) return false;
    return true;
}

Rational CyclicEquivariantModel::pairing_trace(const Path& p, const Path& q) const {
    if (p.length() != 1 || q.length() != 1)
        throw validation_error("pairing trace expects single arrows");
    if (q.source() != p.target() || q.target() != p.source())
        throw validation_error("pairing trace expects opposite arrows i -> j and j -> i");
    // phi(q) phi(p) has word w1 w2 with w1 = letter(q), w2 = letter(p); the
    // trace over V (x) V_i is w2(iota(w1)) with iota(u) = -e2, iota(v) = e1.
    const char w1 = letter(q.arrows()[0]);
    const char w2 = letter(p.arrows()[0]);
    const Rational i1 = (w1 == 'u') ? Rational(0) : Rational(1);
    const Rational i2 = (w1 == 'u') ? Rational(-1) : Rational(0);
    return (w2 == 'u') ? i1 : i2;
}

EvaluationSpan generic_point_evaluation(int order, int vertex, const Rational& x1,
                                        const Rational& x2, int max_degree) {
    if (max_degree < 0) throw validation_error("negative degree bound");
    const CyclicEquivariantModel model(order);
    EvaluationSpan span;
    for (int d = 1; d <= max_degree; ++d)
        for (const WeightMonomial& m : model.basis(vertex, vertex, d)) {
            span.values.push_back(m.eval(x1, x2));
            if (!span.values.back().is_zero()) span.full = true;
        }
    return span;
}

} // namespace ppalg
