#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ppalg/cache.hpp"
#include "ppalg/dynkin.hpp"
#include "ppalg/errors.hpp"
#include "ppalg/groups.hpp"
#include "ppalg/json_io.hpp"
#include "ppalg/theorems.hpp"
#include "ppalg/truncation.hpp"

using namespace ppalg;

namespace {

// Everything the run depends on; echoed verbatim into the report so a run
// can be reproduced from its output alone.
struct RunConfig {
    std::string verb;
    std::string what;
    std::string group;
    std::string emit;
    std::string catalog;
    std::string quiver_file;
    std::string roots;
    std::string mu = "0";
    std::vector<std::string> lambdas;
    std::string vertex;
    std::string reference = "extending";
    int max_degree = 6;
    int through = -1; // -1: max_degree - 2
    int trials = 20;
    std::uint64_t seed = 1;
    std::string cache_dir;
    bool verify_cache = false;
    std::string out;
};

json config_json(const RunConfig& c) {
    json j{{"verb", c.verb}};
    if (!c.what.empty()) j["what"] = c.what;
    if (!c.group.empty()) j["group"] = c.group;
    if (!c.emit.empty()) j["emit"] = c.emit;
    if (!c.catalog.empty()) j["catalog"] = c.catalog;
    if (!c.quiver_file.empty()) j["quiver_file"] = c.quiver_file;
    if (!c.roots.empty()) {
        j["roots"] = c.roots;
        j["mu"] = c.mu;
    }
    if (!c.lambdas.empty()) j["lambda"] = c.lambdas;
    if (!c.vertex.empty()) j["vertex"] = c.vertex;
    j["N"] = c.max_degree;
    if (c.what == "center") {
        j["through"] = c.through;
        j["reference"] = c.reference;
    }
    if (c.what == "pi-degree") {
        j["trials"] = c.trials;
        j["seed"] = c.seed;
    }
    if (!c.cache_dir.empty()) {
        j["cache_dir"] = c.cache_dir;
        j["verify_cache"] = c.verify_cache;
    }
    return j;
}

void write_report(const std::string& path, const json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw io_error("cannot write " + path);
    f << text;
}

int verdict_exit(const std::string& verdict) {
    if (verdict == "holds") return 0;
    if (verdict == "inconclusive") return 3;
    return 4;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    for (const std::string& part : split(text, ','))
        values.push_back(Rational::parse(part));
    return values;
}

// "0", a comma list in catalog vertex order, or a JSON map vertex -> value.
Weight parse_weight(const Quiver& q, const std::string& text) {
    if (text == "0") return Weight::zero(q);
    if (!text.empty() && text.front() == '{')
        return weight_from_json(q, json::parse(text));
    return Weight::from_values(q, parse_rational_list(text));
}

std::vector<std::vector<Rational>> parse_roots(const std::string& text) {
    std::vector<std::vector<Rational>> roots;
    for (const std::string& arm : split(text, ';'))
        roots.push_back(parse_rational_list(arm));
    return roots;
}

struct Instance {
    std::optional<DynkinModel> model;
    Quiver base;
    std::string describe;
};

Instance load_instance(const RunConfig& c) {
    if (!c.catalog.empty() && !c.quiver_file.empty())
        throw validation_error("give either --catalog or --quiver-file, not both");
    Instance inst;
    if (!c.catalog.empty()) {
        inst.model = dynkin_catalog(c.catalog);
        inst.base = inst.model->quiver;
        inst.describe = c.catalog;
        return inst;
    }
    if (c.quiver_file.empty())
        throw validation_error("this command needs --catalog or --quiver-file");
    std::ifstream in(c.quiver_file);
    if (!in) throw io_error("cannot read " + c.quiver_file);
    json doc;
    in >> doc;
    inst.base = quiver_from_json(doc);
    inst.describe = c.quiver_file;
    return inst;
}

int resolve_vertex(const Instance& inst, const std::string& spec) {
    if (inst.model) {
        if (spec == "center") {
            const auto center = inst.model->center_vertex();
            if (!center)
                throw validation_error("catalog entry has no unique branch vertex");
            return *center;
        }
        if (spec == "extending") return inst.model->extending;
    }
    return inst.base.vertex_index(spec);
}

TruncatedQuotient acquire(const RunConfig& c, const DoubleQuiver& dq, const Weight& lambda) {
    TruncatedQuotient::Options opt;
    opt.max_degree = c.max_degree;
    if (c.cache_dir.empty()) return TruncatedQuotient::preprojective(dq, lambda, opt);
    const CacheOutcome outcome =
        cached_preprojective(c.cache_dir, dq, lambda, opt, c.verify_cache);
    std::cerr << "cache " << (outcome.hit ? "hit" : "miss")
              << (outcome.verified ? " (verified)" : "") << ": " << outcome.file << "\n";
    return outcome.quotient;
}

json work_json(const TruncatedQuotient& t) {
    return json{{"rules", t.rule_count()}, {"standard_paths", t.dimension_table().total()}};
}

// The finite subgroup whose invariant theory matches a catalog label.
std::optional<GroupData> oracle_group(const std::string& label) {
    if (label.rfind("A~", 0) == 0)
        return GroupData::parse("cyclic:" + std::to_string(std::stoi(label.substr(2)) + 1));
    if (label.rfind("D~", 0) == 0)
        return GroupData::parse("binary-dihedral:" +
                                std::to_string(std::stoi(label.substr(2)) - 2));
    if (label == "E~6") return GroupData::parse("binary-tetrahedral");
    if (label == "E~7") return GroupData::parse("binary-octahedral");
    if (label == "E~8") return GroupData::parse("binary-icosahedral");
    return std::nullopt;
}

json mckay_graph_json(const GroupData& g) {
    const McKayGraph graph = mckay_graph(g);
    json m = json::array();
    for (const auto& row : graph.m) m.push_back(row);
    return json{{"name", g.name()},
                {"order", g.order()},
                {"class_count", g.class_count()},
                {"dynkin_label", graph.dynkin_label},
                {"delta", graph.delta},
                {"multiplicity", std::move(m)},
                {"to_dynkin", graph.to_dynkin}};
}

json chartable_json(const GroupData& g) {
    json classes = json::array();
    for (const ConjugacyClass& c : g.classes())
        classes.push_back(json{{"name", c.name},
                               {"size", c.size},
                               {"element_order", c.element_order}});
    json irreps = json::array();
    for (const Irrep& irrep : g.irreps()) {
        json chi = json::array();
        for (const Cyclotomic& value : irrep.chi) chi.push_back(json_of(value));
        irreps.push_back(
            json{{"name", irrep.name}, {"dim", irrep.dim}, {"chi", std::move(chi)}});
    }
    return json{{"classes", std::move(classes)}, {"irreps", std::move(irreps)}};
}

json oracle_dims_json(const GroupData& g, int max_degree) {
    const McKayGraph graph = mckay_graph(g);
    const Quiver& q = dynkin_catalog(graph.dynkin_label).quiver;
    return json{{"dynkin_label", graph.dynkin_label},
                {"table", json_of(q, oracle_dimension_table(g, max_degree))}};
}

int cmd_mckay(const RunConfig& c) {
    const GroupData g = GroupData::parse(c.group);
    json report{{"tool", "ppalg"}, {"command", "mckay"}, {"config", config_json(c)}};
    if (c.emit.empty() || c.emit == "graph") report["graph"] = mckay_graph_json(g);
    if (c.emit.empty() || c.emit == "chartable") report["chartable"] = chartable_json(g);
    if (c.emit.empty() || c.emit == "dims")
        report["dims"] = oracle_dims_json(g, c.max_degree);
    write_report(c.out, report);
    return 0;
}

json layers_json(const std::vector<long>& layers) { return json(layers); }

json element_json(const Quiver& q, const Element& x) { return json_of(q, x); }

int emit_verify(const RunConfig& c, json result, const std::string& verdict,
                std::optional<json> work) {
    json report{{"tool", "ppalg"},
                {"command", "verify"},
                {"config", config_json(c)},
                {"result", std::move(result)},
                {"verdict", verdict}};
    if (work) report["work"] = std::move(*work);
    write_report(c.out, report);
    return verdict_exit(verdict);
}

int verify_theorem1(const RunConfig& c) {
    if (c.roots.empty()) throw validation_error("theorem1 needs --roots and --mu");
    const auto roots = parse_roots(c.roots);
    const Rational mu = Rational::parse(c.mu);
    const StarPresentationReport rep = verify_star_presentation(roots, mu, c.max_degree);

    const StarInstance si = star_instance(roots, mu);
    const Quiver total = DoubleQuiver::of(si.quiver).total();
    json arm_residues = json::array();
    for (const Element& r : rep.arm_residues) arm_residues.push_back(element_json(total, r));
    json roots_json = json::array();
    for (const auto& arm : roots) {
        json one = json::array();
        for (const Rational& r : arm) one.push_back(json_of(r));
        roots_json.push_back(std::move(one));
    }
    json result{{"roots", std::move(roots_json)},
                {"mu", json_of(mu)},
                {"N", rep.max_degree},
                {"lambda", json_of(si.quiver, si.weight)},
                {"relations_hold", rep.relations_hold},
                {"arm_residues", std::move(arm_residues)},
                {"sum_residue", element_json(total, rep.sum_residue)},
                {"corner_dims", rep.corner_dims},
                {"loop_dims", rep.loop_dims},
                {"dims_match", rep.dims_match}};
    return emit_verify(c, std::move(result), rep.verdict, std::nullopt);
}

int verify_chain(const RunConfig& c) {
    if (c.lambdas.size() != 1)
        throw validation_error("chain needs exactly one --lambda list");
    const std::vector<Rational> lambdas = parse_rational_list(c.lambdas[0]);
    const int needed = 2 * (static_cast<int>(lambdas.size()) + 1);
    if (c.max_degree < needed)
        throw validation_error("chain of this length needs -N at least " +
                               std::to_string(needed));
    const ChainReport rep = chain_min_poly(lambdas);
    json lam = json::array();
    for (const Rational& v : lambdas) lam.push_back(json_of(v));
    json formula = json::array(), truncated = json::array();
    for (const Rational& v : rep.formula) formula.push_back(json_of(v));
    for (const Rational& v : rep.truncated) truncated.push_back(json_of(v));
    json result{{"n", rep.n},
                {"lambda", std::move(lam)},
                {"scalar_algebra", rep.scalar_algebra},
                {"formula", std::move(formula)},
                {"truncated", std::move(truncated)},
                {"agree", rep.agree}};
    return emit_verify(c, std::move(result), rep.agree ? "holds" : "fails", std::nullopt);
}

int verify_dims(const RunConfig& c) {
    const Instance inst = load_instance(c);
    if (c.lambdas.size() > 1) throw validation_error("dims takes at most one --lambda");
    const DoubleQuiver dq = DoubleQuiver::of(inst.base);
    const Weight lambda =
        parse_weight(inst.base, c.lambdas.empty() ? "0" : c.lambdas[0]);
    const TruncatedQuotient t = acquire(c, dq, lambda);
    const DimensionTable table = t.dimension_table();

    json result{{"instance", inst.describe},
                {"lambda", json_of(inst.base, lambda)},
                {"N", c.max_degree},
                {"table", json_of(inst.base, table)}};
    std::string verdict = "holds";
    bool zero_lambda = true;
    for (const Rational& v : lambda.values()) zero_lambda = zero_lambda && v.is_zero();
    if (inst.model && zero_lambda) {
        if (const auto g = oracle_group(inst.model->label)) {
            const DimensionTable oracle = oracle_dimension_table(*g, c.max_degree);
            const auto diff = DimensionTable::first_difference(table, oracle);
            result["oracle_group"] = g->name();
            result["oracle_agrees"] = !diff.has_value();
            if (diff)
                result["first_difference"] = json{{"src", diff->src},
                                                  {"tgt", diff->tgt},
                                                  {"degree", diff->degree},
                                                  {"engine", diff->left},
                                                  {"oracle", diff->right}};
            verdict = diff ? "fails" : "holds";
        }
    }
    return emit_verify(c, std::move(result), verdict, work_json(t));
}

int verify_lambda_independence(const RunConfig& c) {
    const Instance inst = load_instance(c);
    if (c.lambdas.empty())
        throw validation_error("lambda-independence needs at least one --lambda");
    const DoubleQuiver dq = DoubleQuiver::of(inst.base);
    const TruncatedQuotient base = acquire(c, dq, Weight::zero(inst.base));
    const DimensionTable reference = base.dimension_table();

    json compared = json::array();
    bool all_equal = true;
    for (const std::string& text : c.lambdas) {
        const Weight lambda = parse_weight(inst.base, text);
        const TruncatedQuotient t = acquire(c, dq, lambda);
        const auto diff = DimensionTable::first_difference(reference, t.dimension_table());
        json entry{{"lambda", json_of(inst.base, lambda)}, {"equal", !diff.has_value()}};
        if (diff) {
            entry["first_difference"] = json{{"src", diff->src},
                                             {"tgt", diff->tgt},
                                             {"degree", diff->degree},
                                             {"at_zero", diff->left},
                                             {"deformed", diff->right}};
            all_equal = false;
        }
        compared.push_back(std::move(entry));
    }
    json result{{"instance", inst.describe},
                {"N", c.max_degree},
                {"baseline", "0"},
                {"compared", std::move(compared)}};
    return emit_verify(c, std::move(result), all_equal ? "holds" : "fails",
                       work_json(base));
}

int verify_pi_degree(const RunConfig& c) {
    const Instance inst = load_instance(c);
    if (!inst.model)
        throw validation_error("pi-degree needs --catalog (the dimension vector)");
    if (c.vertex.empty()) throw validation_error("pi-degree needs --vertex");
    const int vertex = resolve_vertex(inst, c.vertex);
    const DoubleQuiver dq = DoubleQuiver::of(inst.base);
    const Weight lambda =
        parse_weight(inst.base, c.lambdas.empty() ? "0" : c.lambdas[0]);
    if (!pairing(lambda, inst.model->delta).is_zero())
        throw validation_error("the identity claim needs delta . lambda = 0");
    const TruncatedQuotient t = acquire(c, dq, lambda);
    const IdentityReport rep =
        verify_standard_identity(t, inst.model->delta, vertex, c.trials, c.seed);

    const Quiver& q = t.quiver();
    json result{{"vertex", inst.base.vertex_id(vertex)},
                {"delta", inst.model->delta},
                {"identity_degree", rep.identity_degree},
                {"argument_degree_cap", rep.argument_degree_cap},
                {"exhaustive_checked", rep.exhaustive_checked},
                {"samples_checked", rep.samples_checked},
                {"identity_holds", rep.identity_holds},
                {"minimality_vacuous", rep.minimality_vacuous}};
    if (!rep.identity_holds) {
        json args = json::array();
        for (const Element& a : rep.failure_args) args.push_back(element_json(q, a));
        result["failure"] =
            json{{"args", std::move(args)}, {"value", element_json(q, rep.failure_value)}};
    }
    if (rep.witness_found) {
        json args = json::array();
        for (const Element& a : rep.witness_args) args.push_back(element_json(q, a));
        result["witness"] =
            json{{"args", std::move(args)}, {"value", element_json(q, rep.witness_value)}};
    } else if (!rep.minimality_vacuous) {
        result["witness"] = nullptr;
    }
    return emit_verify(c, std::move(result), rep.verdict, work_json(t));
}

int verify_center(const RunConfig& c) {
    const Instance inst = load_instance(c);
    if (c.vertex.empty()) throw validation_error("center needs --vertex");
    const int vertex = resolve_vertex(inst, c.vertex);
    const int reference = resolve_vertex(inst, c.reference);
    const DoubleQuiver dq = DoubleQuiver::of(inst.base);
    const Weight lambda =
        parse_weight(inst.base, c.lambdas.empty() ? "0" : c.lambdas[0]);
    const TruncatedQuotient t = acquire(c, dq, lambda);
    const int through = c.through >= 0 ? c.through : std::max(0, c.max_degree - 2);
    const CenterReport rep = center_dimensions(t, vertex, through, reference);

    json result{{"vertex", inst.base.vertex_id(vertex)},
                {"reference", inst.base.vertex_id(reference)},
                {"through_degree", rep.through_degree},
                {"partner_degree", rep.partner_degree},
                {"commutant_layers", layers_json(rep.commutant_layers)},
                {"reference_layers", layers_json(rep.reference_layers)},
                {"lifted_layers", layers_json(rep.lifted_layers)},
                {"layers_match", rep.layers_match},
                {"lifts_unique", rep.lifts_unique},
                {"lifts_multiplicative", rep.lifts_multiplicative}};
    return emit_verify(c, std::move(result), rep.verdict, work_json(t));
}

int verify_kleinian(const RunConfig& c) {
    const Instance inst = load_instance(c);
    if (c.vertex.empty()) throw validation_error("kleinian needs --vertex");
    const int vertex = resolve_vertex(inst, c.vertex);
    const DoubleQuiver dq = DoubleQuiver::of(inst.base);
    const Weight lambda =
        parse_weight(inst.base, c.lambdas.empty() ? "0" : c.lambdas[0]);
    const TruncatedQuotient t = acquire(c, dq, lambda);
    const CornerPresentation rep = corner_presentation(t, vertex);

    const Quiver& q = t.quiver();
    json gens = json::array();
    for (const Element& g : rep.generators) gens.push_back(element_json(q, g));
    json relation = json::array();
    for (const auto& [expo, coeff] : rep.relation)
        relation.push_back(json{{"exponents", expo}, {"coeff", json_of(coeff)}});
    json result{{"vertex", inst.base.vertex_id(vertex)},
                {"generators", std::move(gens)},
                {"generator_degrees", rep.generator_degrees},
                {"relation", std::move(relation)},
                {"relation_degree", rep.relation_degree},
                {"minimal", rep.minimal},
                {"commutative", rep.commutative}};
    const std::string verdict = (rep.minimal && rep.commutative) ? "holds" : "fails";
    return emit_verify(c, std::move(result), verdict, work_json(t));
}

int dispatch_verify(const RunConfig& c) {
    if (c.what == "theorem1") return verify_theorem1(c);
    if (c.what == "center") return verify_center(c);
    if (c.what == "pi-degree") return verify_pi_degree(c);
    if (c.what == "kleinian") return verify_kleinian(c);
    if (c.what == "chain") return verify_chain(c);
    if (c.what == "dims") return verify_dims(c);
    if (c.what == "lambda-independence") return verify_lambda_independence(c);
    throw validation_error("unknown verification \"" + c.what + "\"");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig config;
    CLI::App app{"Exact truncation engine for deformed preprojective algebras"};
    app.require_subcommand(1);

    CLI::App* mckay = app.add_subcommand("mckay", "Character-theoretic side: McKay graph, "
                                                  "character table, dimension oracle");
    mckay->add_option("--group", config.group,
                      "cyclic:n | binary-dihedral:n | binary-tetrahedral | "
                      "binary-octahedral | binary-icosahedral (E~6/E~7/E~8 also accepted)")
        ->required();
    mckay->add_option("--emit", config.emit, "graph | chartable | dims (default: all)");
    mckay->add_option("--max-degree,-N", config.max_degree, "degree bound for dims");
    mckay->add_option("--out", config.out, "report file (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Verify a statement on an instance");
    verify->add_option("what", config.what,
                       "theorem1 | center | pi-degree | kleinian | chain | dims | "
                       "lambda-independence")
        ->required();
    verify->add_option("--catalog", config.catalog, "affine Dynkin label, e.g. D~4");
    verify->add_option("--quiver-file", config.quiver_file, "quiver JSON file");
    verify->add_option("--roots", config.roots,
                       "arm root lists for theorem1, e.g. \"0,1;0,1;0,1\"");
    verify->add_option("--mu", config.mu, "scalar mu for theorem1");
    verify->add_option("--lambda,--lambdas", config.lambdas,
                       "weight: \"0\", comma list in catalog order, or JSON map; "
                       "repeatable for lambda-independence");
    verify->add_option("--vertex", config.vertex, "vertex id, or center | extending");
    verify->add_option("--reference", config.reference,
                       "reference vertex for center (default: extending)");
    verify->add_option("-N,--max-degree", config.max_degree, "truncation bound");
    verify->add_option("--through", config.through,
                       "report degree for center (default: N - 2)");
    verify->add_option("--trials", config.trials, "random samples for pi-degree");
    verify->add_option("--seed", config.seed, "seed for all randomness");
    verify->add_option("--cache-dir", config.cache_dir, "truncation cache directory");
    verify->add_flag("--verify-cache", config.verify_cache,
                     "check cache hits against a fresh rebuild");
    verify->add_option("--out", config.out, "report file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        write_report(config.out, json{{"error", "usage"}, {"message", e.what()}});
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 1;
    try {
        if (mckay->parsed()) {
            config.verb = "mckay";
            code = cmd_mckay(config);
        } else {
            config.verb = "verify";
            code = dispatch_verify(config);
        }
    } catch (const resource_limit& e) {
        write_report(config.out, json{{"error", "resource-limit"}, {"message", e.what()}});
        return 3;
    } catch (const error& e) {
        write_report(config.out, json{{"error", "validation"}, {"message", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    std::cerr << "wall_ms=" << ms << "\n";
    return code;
}
