// grr: exact rigidity invariants of graded rings, batch CLI.
// JSON (stable, machine-readable) to stdout; diagnostics to stderr.
// Exit codes: 0 success, 2 domain error, 64 usage error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grr/errors.hpp"
#include "grr/json_io.hpp"
#include "grr/pb.hpp"

using namespace grr;

namespace {

struct Options {
    std::string format = "json";
    bool assume_conjecture = false;
    unsigned jobs = 1;
};

Json envelope(const std::string& command, Json inputs, Json results,
              const std::vector<RigidityVerdict>& verdicts,
              const std::vector<std::string>& warnings) {
    Json v = Json::array();
    for (const RigidityVerdict& rv : verdicts) v.push_back(verdict_to_json(rv));
    Json w = Json::array();
    for (const std::string& s : warnings) w.push_back(s);
    return Json{{"v", 1},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"verdicts", std::move(v)},
                {"warnings", std::move(w)}};
}

void render_text(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 1);
            } else {
                os << pad << key << ": "
                   << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const Json& item : j) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render_text(item, os, indent + 1);
            } else {
                os << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump())
                   << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& report, const Options& opt) {
    if (opt.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        render_text(report, std::cout, 0);
    }
}

const char* kGradedContracts =
    "results assume the presented ring is a normal noetherian domain graded over a "
    "field of characteristic 0 and that the prime witness list covers every height-1 "
    "prime meeting the generating set; neither is verified";

Json tuple_to_json(const PBTuple& t) {
    return int_vector_to_json(t.entries());
}

Json mset_to_json(const MSet& m) {
    return Json{{"elements", int_vector_to_json(m.elements)},
                {"e", int_to_json(m.e)},
                {"ebar", int_to_json(m.ebar)}};
}

Json invariants_to_json(const PBInvariants& inv) {
    Json s = Json::array();
    for (size_t i : inv.s_set) s.push_back(i);
    return Json{{"L", int_to_json(inv.big_l)},
                {"L_i", int_vector_to_json(inv.l)},
                {"d_i", int_vector_to_json(inv.d)},
                {"s_set", s},
                {"cotype", inv.cotype},
                {"e", int_to_json(inv.e)},
                {"ebar", int_to_json(inv.ebar)}};
}

PBTuple parse_tuple(const std::string& text) {
    return PBTuple(parse_int_list(text));
}

// --- graded ---------------------------------------------------------------

int run_graded_analyze(const std::string& path, const Options& opt) {
    PresentationFile f = load_presentation_file(path);
    GradedPresentation p = to_graded_presentation(f);

    Subgroup support = gg(p);
    Subgroup saturated_support = gbar(p);
    MlBound ml = ml_trdeg_lower_bound(p);
    std::vector<RigidityVerdict> verdicts{nonrigidity_verdict(p)};

    Json results;
    results["gg"] = subgroup_report(support);
    results["gbar"] = subgroup_report(saturated_support);
    results["saturated_in_codim1"] = is_saturated_codim1(p);
    results["ml_trdeg_lower_bound"] = ml.r;
    results["w"] = subgroup_report(ml.w);
    if (has_z_ambient(f)) {
        ZPresentation z = to_zpresentation(f);
        Json zg{{"e", int_to_json(e_of(z))}, {"ebar", int_to_json(ebar_of(z))}};
        if (auto forced = forced_mset(z)) zg["m"] = int_vector_to_json(forced->elements);
        results["z_grading"] = std::move(zg);
        verdicts.push_back(nonrigidity_verdict(z));
    }
    emit(envelope("graded analyze", Json{{"presentation", presentation_file_to_json(f)}},
                  std::move(results), verdicts, {kGradedContracts}),
         opt);
    return 0;
}

// --- pb ---------------------------------------------------------------------

int run_pb_analyze(const std::string& tuple_text, const Options& opt) {
    PBTuple t = parse_tuple(tuple_text);
    PBInvariants inv = derive(t);
    Json results;
    results["tuple"] = tuple_to_json(t);
    results["n"] = t.n();
    results["invariants"] = invariants_to_json(inv);
    results["in_gamma"] = in_gamma(t);
    results["saturated_in_codim1"] = inv.cotype == 0;
    if (t.n() >= 4) {
        Json adm = Json::array();
        for (size_t i : admissible_indices(t)) adm.push_back(i);
        results["admissible_indices"] = adm;
    }
    std::vector<std::string> warnings;
    if (opt.assume_conjecture) warnings.push_back("rigidity conjecture assumed where undecided");
    emit(envelope("pb analyze", Json{{"tuple", tuple_to_json(t)}}, std::move(results),
                  {rigidity_status(t, opt.assume_conjecture)}, warnings),
         opt);
    return 0;
}

int run_pb_mset(const std::string& tuple_text, const Options& opt) {
    PBTuple t = parse_tuple(tuple_text);
    MSet closed = m_set_closed_form(t, opt.assume_conjecture);
    MSet oracle = m_set_oracle(t, opt.assume_conjecture, opt.jobs);
    Json results;
    results["closed_form"] = mset_to_json(closed);
    results["oracle"] = mset_to_json(oracle);
    results["agree"] = closed == oracle;
    std::vector<std::string> warnings;
    if (opt.assume_conjecture) warnings.push_back("rigidity conjecture assumed where undecided");
    emit(envelope("pb mset", Json{{"tuple", tuple_to_json(t)}}, std::move(results), {}, warnings),
         opt);
    return 0;
}

int run_pb_oracle(const std::string& tuple_text, const Options& opt) {
    PBTuple t = parse_tuple(tuple_text);
    MSet oracle = m_set_oracle(t, opt.assume_conjecture, opt.jobs);
    std::vector<std::string> warnings;
    if (opt.assume_conjecture) warnings.push_back("rigidity conjecture assumed where undecided");
    emit(envelope("pb oracle", Json{{"tuple", tuple_to_json(t)}},
                  Json{{"oracle", mset_to_json(oracle)}}, {}, warnings),
         opt);
    return 0;
}

int run_pb_realize(const std::string& set_text, const Options& opt) {
    std::vector<Int> y = parse_int_list(set_text);
    PBTuple t = realize(y);
    MSet verified = m_set_oracle(t, false, opt.jobs);
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    Json results;
    results["tuple"] = tuple_to_json(t);
    results["oracle"] = mset_to_json(verified);
    results["verified"] = verified.elements == y;
    emit(envelope("pb realize", Json{{"set", int_vector_to_json(y)}}, std::move(results), {}, {}),
         opt);
    return 0;
}

int run_pb_veronese(const std::string& tuple_text, const std::string& d_text,
                    const Options& opt) {
    PBTuple t = parse_tuple(tuple_text);
    std::vector<Int> ds = parse_int_list(d_text);
    if (ds.size() != 1) throw Error("ParseError", "expected a single Veronese index");
    const Int& d = ds[0];
    PBTuple w = veronese_pb(t, d);
    Json results;
    results["tuple"] = tuple_to_json(t);
    results["d"] = int_to_json(d);
    results["veronese"] = tuple_to_json(w);
    emit(envelope("pb veronese", Json{{"tuple", tuple_to_json(t)}, {"d", int_to_json(d)}},
                  std::move(results), {rigidity_status(w, opt.assume_conjecture)},
                  {"the Veronese tuple presents the subring up to an isomorphism that "
                   "preserves rigidity status but not degrees"}),
         opt);
    return 0;
}

// --- group -------------------------------------------------------------------

FgGroup parse_ambient(const std::string& spec, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("ParseError", "cannot open '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        Json j;
        try {
            j = Json::parse(buf.str());
        } catch (const nlohmann::json::parse_error& e) {
            throw Error("ParseError", e.what());
        }
        const Json& group = j.contains("group") ? j.at("group") : j;
        Int fr = json_to_int(group.at("free_rank"));
        std::vector<Int> torsion;
        for (const Json& t : group.at("torsion")) torsion.push_back(json_to_int(t));
        return FgGroup::direct_sum(fr.get_ui(), torsion);
    }
    try {
        if (spec == "z") return FgGroup::free_group(1);
        if (spec.rfind("z^", 0) == 0) {
            Int k(spec.substr(2));
            if (k < 1) throw Error("ParseError", "free rank must be >= 1");
            return FgGroup::free_group(k.get_ui());
        }
        if (spec.rfind("z:", 0) == 0) return FgGroup::cyclic(Int(spec.substr(2)));
    } catch (const std::invalid_argument&) {
        throw Error("ParseError", "'" + spec + "' is not a valid ambient group");
    }
    throw Error("ParseError", "ambient must be z, z^k, z:m or come from --ambient-file");
}

// One subgroup per token; generators inside a token are separated by ';'.
Subgroup parse_subgroup(const FgGroup& g, const std::string& token) {
    std::vector<GroupElement> gens;
    std::string part;
    std::stringstream ss(token);
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        gens.push_back(make_element(g, parse_int_list(part)));
    }
    return subgroup_span(g, gens);
}

Json group_inputs(const FgGroup& g, const std::vector<std::string>& tokens) {
    Json rel = Json::array();
    for (size_t i = 0; i < g.relations().rows(); ++i)
        rel.push_back(int_vector_to_json(g.relations().row(i)));
    Json toks = Json::array();
    for (const std::string& t : tokens) toks.push_back(t);
    return Json{{"ambient_rank", g.ambient_rank()}, {"relations", rel}, {"arguments", toks}};
}

int run_group(const std::string& sub, const std::string& ambient_spec,
              const std::string& ambient_file, const std::vector<std::string>& tokens,
              const Options& opt) {
    FgGroup g = parse_ambient(ambient_spec, ambient_file);
    Json results;

    if (sub == "span") {
        Subgroup acc = zero_subgroup(g);
        for (const std::string& t : tokens) acc = subgroup_sum(acc, parse_subgroup(g, t));
        results["subgroup"] = subgroup_report(acc);
    } else if (sub == "intersect" || sub == "sum") {
        if (tokens.size() < 2)
            throw Error("PreconditionViolation", sub + " needs at least two subgroups");
        Subgroup acc = parse_subgroup(g, tokens[0]);
        for (size_t i = 1; i < tokens.size(); ++i) {
            Subgroup next = parse_subgroup(g, tokens[i]);
            acc = sub == "intersect" ? subgroup_intersect(acc, next) : subgroup_sum(acc, next);
        }
        results["subgroup"] = subgroup_report(acc);
    } else if (sub == "torc") {
        if (tokens.empty()) throw Error("PreconditionViolation", "torc needs a subgroup");
        Subgroup h = parse_subgroup(g, tokens[0]);
        Subgroup k = tokens.size() > 1 ? parse_subgroup(g, tokens[1]) : full_subgroup(g);
        results["subgroup"] = subgroup_report(torsion_closure(h, k));
    } else { // rank
        if (tokens.empty()) throw Error("PreconditionViolation", "rank needs a subgroup");
        Subgroup small = parse_subgroup(g, tokens[0]);
        Subgroup big = tokens.size() > 1 ? parse_subgroup(g, tokens[1]) : full_subgroup(g);
        results["quotient_rank"] = quotient_rank(small, big);
        results["quotient_is_torsion"] = quotient_is_torsion(small, big);
        results["small"] = subgroup_report(small);
        results["big"] = subgroup_report(big);
    }
    emit(envelope("group " + sub, group_inputs(g, tokens), std::move(results), {}, {}), opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rigidity invariants of graded rings"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--assume-conjecture", opt.assume_conjecture,
                 "treat admissible tuples of length >= 5 as rigid");
    app.add_option("--jobs", opt.jobs, "threads for the divisor sweep")
        ->check(CLI::Range(1u, 256u));

    std::function<int()> action;

    auto* graded = app.add_subcommand("graded", "invariants of a graded presentation");
    graded->fallthrough();
    graded->require_subcommand(1);
    auto* ganalyze = graded->add_subcommand("analyze", "support group, saturation, verdict");
    ganalyze->fallthrough();
    static std::string graded_file;
    ganalyze->add_option("file", graded_file, "presentation JSON file")->required();
    ganalyze->callback([&] { action = [&] { return run_graded_analyze(graded_file, opt); }; });

    auto* pb = app.add_subcommand("pb", "Pham-Brieskorn calculus");
    pb->fallthrough();
    pb->require_subcommand(1);
    static std::string pb_tuple, pb_d, pb_set;

    auto* panalyze = pb->add_subcommand("analyze", "derived invariants and rigidity verdict");
    panalyze->fallthrough();
    panalyze->add_option("tuple", pb_tuple, "comma-separated exponents")->required();
    panalyze->callback([&] { action = [&] { return run_pb_analyze(pb_tuple, opt); }; });

    auto* pmset = pb->add_subcommand("mset", "closed form and oracle M sets side by side");
    pmset->fallthrough();
    pmset->add_option("tuple", pb_tuple, "comma-separated exponents")->required();
    pmset->callback([&] { action = [&] { return run_pb_mset(pb_tuple, opt); }; });

    auto* poracle = pb->add_subcommand("oracle", "brute-force M set");
    poracle->fallthrough();
    poracle->add_option("tuple", pb_tuple, "comma-separated exponents")->required();
    poracle->callback([&] { action = [&] { return run_pb_oracle(pb_tuple, opt); }; });

    auto* prealize = pb->add_subcommand("realize", "tuple whose M set is the given set");
    prealize->fallthrough();
    prealize->add_option("set", pb_set, "comma-separated pairwise coprime elements")->required();
    prealize->callback([&] { action = [&] { return run_pb_realize(pb_set, opt); }; });

    auto* pveronese = pb->add_subcommand("veronese", "exponents of the d-th Veronese subring");
    pveronese->fallthrough();
    pveronese->add_option("tuple", pb_tuple, "comma-separated exponents")->required();
    pveronese->add_option("d", pb_d, "divisor of ebar")->required();
    pveronese->callback([&] { action = [&] { return run_pb_veronese(pb_tuple, pb_d, opt); }; });

    auto* group = app.add_subcommand("group", "finitely generated abelian group arithmetic");
    group->fallthrough();
    group->require_subcommand(1);
    static std::string ambient_spec, ambient_file;
    static std::vector<std::string> tokens;
    for (const char* name : {"span", "intersect", "sum", "torc", "rank"}) {
        auto* sub = group->add_subcommand(name);
        sub->fallthrough();
        sub->add_option("--ambient", ambient_spec, "z, z^k or z:m");
        sub->add_option("--ambient-file", ambient_file, "JSON file with a group object");
        sub->add_option("vectors", tokens, "lattice vectors; use ';' inside one subgroup");
        sub->callback([&, name] {
            action = [&, name] {
                return run_group(name, ambient_spec, ambient_file, tokens, opt);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        return action ? action() : 64;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
