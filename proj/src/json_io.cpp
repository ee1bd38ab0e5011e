#include "grr/json_io.hpp"

#include <fstream>
#include <sstream>

#include "grr/errors.hpp"

namespace grr {

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw Error("ParseError", "'" + s + "' is not a decimal integer");
        }
    }
    throw Error("ParseError", "expected an integer (number or decimal string)");
}

Json int_to_json(const Int& x) {
    return Json(x.get_str());
}

Json int_vector_to_json(const std::vector<Int>& xs) {
    Json a = Json::array();
    for (const Int& x : xs) a.push_back(int_to_json(x));
    return a;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        // trim blanks
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("ParseError", "empty entry in integer list");
        try {
            out.emplace_back(item.substr(b, e - b + 1));
        } catch (const std::invalid_argument&) {
            throw Error("ParseError", "'" + item + "' is not a decimal integer");
        }
    }
    if (out.empty()) throw Error("ParseError", "empty integer list");
    return out;
}

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw Error("ParseError", std::string("missing field '") + name + "'");
    return *it;
}

} // namespace

PresentationFile parse_presentation_file(const Json& j) {
    if (!j.is_object()) throw Error("ParseError", "presentation must be a JSON object");
    if (j.contains("v") && json_to_int(j.at("v")) != 1)
        throw Error("ParseError", "unsupported schema version");

    PresentationFile f;
    const Json& group = field(j, "group");
    Int fr = json_to_int(field(group, "free_rank"));
    if (fr < 0 || fr > 4096) throw Error("ParseError", "group.free_rank out of range");
    f.free_rank = fr.get_ui();
    for (const Json& t : field(group, "torsion")) {
        Int order = json_to_int(t);
        if (order < 2) throw Error("InvalidPresentation", "group.torsion entries must be >= 2");
        f.torsion.push_back(order);
    }

    const size_t k = f.free_rank + f.torsion.size();
    size_t gi = 0;
    for (const Json& g : field(j, "generators")) {
        std::string where = "generators[" + std::to_string(gi++) + "]";
        std::string name = field(g, "name").get<std::string>();
        std::vector<Int> degree;
        for (const Json& c : field(g, "degree")) degree.push_back(json_to_int(c));
        if (degree.size() != k)
            throw Error("InvalidPresentation",
                        where + ".degree: length " + std::to_string(degree.size()) +
                            " != ambient rank " + std::to_string(k));
        f.generators.emplace_back(std::move(name), std::move(degree));
    }

    size_t pi = 0;
    for (const Json& p : field(j, "primes")) {
        std::string where = "primes[" + std::to_string(pi++) + "]";
        PrimeWitness w;
        for (const Json& n : field(p, "contains")) w.contains.push_back(n.get<std::string>());
        if (w.contains.empty())
            throw Error("InvalidPresentation", where + ".contains must be nonempty");
        f.primes.push_back(std::move(w));
    }
    return f;
}

PresentationFile parse_presentation_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("ParseError", e.what());
    }
    return parse_presentation_file(j);
}

PresentationFile load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation_text(buf.str());
}

Json presentation_file_to_json(const PresentationFile& f) {
    Json j;
    j["v"] = 1;
    j["group"] = Json{{"free_rank", f.free_rank}, {"torsion", int_vector_to_json(f.torsion)}};
    Json gens = Json::array();
    for (const auto& [name, degree] : f.generators)
        gens.push_back(Json{{"name", name}, {"degree", int_vector_to_json(degree)}});
    j["generators"] = gens;
    Json primes = Json::array();
    for (const PrimeWitness& w : f.primes) {
        Json names = Json::array();
        for (const std::string& n : w.contains) names.push_back(n);
        primes.push_back(Json{{"contains", names}});
    }
    j["primes"] = primes;
    return j;
}

FgGroup ambient_group(const PresentationFile& f) {
    return FgGroup::direct_sum(f.free_rank, f.torsion);
}

GradedPresentation to_graded_presentation(const PresentationFile& f) {
    FgGroup g = ambient_group(f);
    std::vector<std::pair<std::string, GroupElement>> gens;
    gens.reserve(f.generators.size());
    for (const auto& [name, degree] : f.generators)
        gens.emplace_back(name, make_element(g, degree));
    return GradedPresentation(std::move(g), std::move(gens), f.primes);
}

bool has_z_ambient(const PresentationFile& f) {
    return f.free_rank == 1 && f.torsion.empty();
}

ZPresentation to_zpresentation(const PresentationFile& f) {
    if (!has_z_ambient(f))
        throw Error("PreconditionViolation", "presentation is not graded by Z");
    std::vector<std::pair<std::string, Int>> degrees;
    for (const auto& [name, degree] : f.generators) degrees.emplace_back(name, degree[0]);
    return ZPresentation(std::move(degrees), f.primes);
}

Json group_structure_to_json(const GroupStructure& s) {
    return Json{{"free_rank", s.free_rank}, {"torsion", int_vector_to_json(s.torsion)}};
}

Json subgroup_report(const Subgroup& h) {
    Json basis = Json::array();
    for (size_t i = 0; i < h.lattice().rows(); ++i)
        basis.push_back(int_vector_to_json(h.lattice().row(i)));
    return Json{{"basis", basis},
                {"group_structure", group_structure_to_json(subgroup_structure(h))},
                {"quotient_structure", group_structure_to_json(quotient_structure(h))}};
}

Json verdict_to_json(const RigidityVerdict& v) {
    return Json{{"status", to_string(v.status)}, {"reason", v.reason}};
}

} // namespace grr
