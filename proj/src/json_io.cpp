#include "ppalg/json_io.hpp"

#include "ppalg/errors.hpp"

namespace ppalg {
namespace {

const json& need(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw validation_error(std::string("missing JSON key \"") + key + "\"");
    return *it;
}

} // namespace

json json_of(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw validation_error("rational must be a JSON string \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

json json_of(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const Rational& r : c.coeffs()) coeffs.push_back(json_of(r));
    return json{{"m", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    const int m = need(j, "m").get<int>();
    std::vector<Rational> coeffs;
    for (const json& c : need(j, "coeffs")) coeffs.push_back(rational_from_json(c));
    return Cyclotomic::from_coeffs(m, std::move(coeffs));
}

json json_of(const Quiver& q) {
    json vertices = json::array();
    for (const std::string& id : q.vertex_ids()) vertices.push_back(id);
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) {
        json entry{{"id", a.id},
                   {"src", q.vertex_id(a.src)},
                   {"tgt", q.vertex_id(a.tgt)}};
        if (a.weight != 1) entry["weight"] = a.weight;
        arrows.push_back(std::move(entry));
    }
    return json{{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const json& j) {
    Quiver q;
    for (const json& v : need(j, "vertices")) q.add_vertex(v.get<std::string>());
    for (const json& a : need(j, "arrows")) {
        const int weight = a.contains("weight") ? a["weight"].get<int>() : 1;
        q.add_arrow(need(a, "id").get<std::string>(), need(a, "src").get<std::string>(),
                    need(a, "tgt").get<std::string>(), weight);
    }
    return q;
}

json json_of(const Quiver& q, const Weight& w) {
    json out = json::object();
    for (int v = 0; v < q.vertex_count(); ++v)
        out[q.vertex_id(v)] = json_of(w.at(v));
    return out;
}

Weight weight_from_json(const Quiver& q, const json& j) {
    std::map<std::string, Rational> values;
    for (const auto& [key, value] : j.items()) values[key] = rational_from_json(value);
    return Weight::from_map(q, values);
}

json json_of(const Quiver& q, const Element& x) {
    json out = json::array();
    for (const auto& [p, c] : x.terms()) {
        json term = json::object();
        if (p.is_trivial()) {
            term["e"] = q.vertex_id(p.source());
        } else {
            json ids = json::array();
            for (int a : p.arrows()) ids.push_back(q.arrow(a).id);
            term["path"] = std::move(ids);
        }
        term["coeff"] = json_of(c);
        out.push_back(std::move(term));
    }
    return out;
}

Element element_from_json(const Quiver& q, const json& j) {
    Element x;
    for (const json& term : j) {
        const Rational c = rational_from_json(need(term, "coeff"));
        if (term.contains("e")) {
            x.add_term(Path::trivial(q.vertex_index(term["e"].get<std::string>())), c);
        } else {
            std::vector<int> arrows;
            for (const json& id : need(term, "path"))
                arrows.push_back(q.arrow_index(id.get<std::string>()));
            x.add_term(Path::from_arrows(q, arrows), c);
        }
    }
    return x;
}

json json_of(const Quiver& q, const DimensionTable& table) {
    json layers = json::object();
    for (int i = 0; i < q.vertex_count(); ++i) {
        json row = json::object();
        for (int j2 = 0; j2 < q.vertex_count(); ++j2) {
            json dims = json::array();
            for (int d = 0; d <= table.max_degree(); ++d) dims.push_back(table.at(i, j2, d));
            row[q.vertex_id(j2)] = std::move(dims);
        }
        layers[q.vertex_id(i)] = std::move(row);
    }
    return json{{"max_degree", table.max_degree()}, {"layers", std::move(layers)}};
}

json quotient_to_json(const TruncatedQuotient& t) {
    const Quiver& q = t.quiver();
    json rules = json::array();
    for (const auto& [head, normal] : t.export_rules()) {
        json head_ids = json::array();
        for (int a : head.arrows()) head_ids.push_back(q.arrow(a).id);
        rules.push_back(json{{"head", std::move(head_ids)},
                             {"source", q.vertex_id(head.source())},
                             {"normal", json_of(q, normal)}});
    }
    json out{{"quiver", json_of(q)},
             {"max_degree", t.max_degree()},
             {"reverse_arrow_order", t.options().reverse_arrow_order},
             {"lambda", t.weight() ? json_of(q, *t.weight()) : json(nullptr)},
             {"rules", std::move(rules)}};
    return out;
}

TruncatedQuotient quotient_from_json(const json& j) {
    const Quiver q = quiver_from_json(need(j, "quiver"));
    TruncatedQuotient::Options opt;
    opt.max_degree = need(j, "max_degree").get<int>();
    opt.reverse_arrow_order = need(j, "reverse_arrow_order").get<bool>();
    std::optional<Weight> lambda;
    if (!need(j, "lambda").is_null()) lambda = weight_from_json(q, j["lambda"]);
    std::vector<std::pair<Path, Element>> rules;
    for (const json& rule : need(j, "rules")) {
        std::vector<int> arrows;
        for (const json& id : need(rule, "head"))
            arrows.push_back(q.arrow_index(id.get<std::string>()));
        Path head = arrows.empty()
                        ? Path::trivial(q.vertex_index(need(rule, "source").get<std::string>()))
                        : Path::from_arrows(q, arrows);
        rules.emplace_back(std::move(head), element_from_json(q, need(rule, "normal")));
    }
    return TruncatedQuotient::restore(q, opt, lambda, rules);
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

} // namespace ppalg
