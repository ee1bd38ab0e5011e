#ifndef GRR_JSON_IO_HPP
#define GRR_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grr/graded.hpp"
#include "grr/zgrading.hpp"

namespace grr {

// Key order is preserved everywhere so identical invocations serialize to
// byte-identical output.
using Json = nlohmann::ordered_json;

// On-disk presentation: schema version 1.
//   { "v": 1,
//     "group": { "free_rank": 0, "torsion": [42] },
//     "generators": [ { "name": "u", "degree": [15] }, ... ],
//     "primes": [ { "contains": ["u", "x"] }, ... ] }
// Degree vectors have length free_rank + |torsion|, free coordinates first.
// Integers may be written as JSON numbers or as decimal strings; output
// always uses decimal strings so values never overflow a JSON reader.
struct PresentationFile {
    unsigned long free_rank = 0;
    std::vector<Int> torsion;
    std::vector<std::pair<std::string, std::vector<Int>>> generators;
    std::vector<PrimeWitness> primes;

    bool operator==(const PresentationFile&) const = default;
};

PresentationFile parse_presentation_file(const Json& j);
PresentationFile parse_presentation_text(const std::string& text);
PresentationFile load_presentation_file(const std::string& path);
Json presentation_file_to_json(const PresentationFile& f);

FgGroup ambient_group(const PresentationFile& f);
GradedPresentation to_graded_presentation(const PresentationFile& f);

// Whether the ambient group is Z itself (free rank 1, no torsion).
bool has_z_ambient(const PresentationFile& f);
ZPresentation to_zpresentation(const PresentationFile& f);

// { "basis": [...rows...], "group_structure": ..., "quotient_structure": ... }
Json subgroup_report(const Subgroup& h);
Json group_structure_to_json(const GroupStructure& s);
Json verdict_to_json(const RigidityVerdict& v);

Json int_to_json(const Int& x);
Json int_vector_to_json(const std::vector<Int>& xs);
Int json_to_int(const Json& j);

// "1,2,-3" -> integer vector; used for CLI tuples, sets and lattice vectors.
std::vector<Int> parse_int_list(const std::string& text);

} // namespace grr

#endif
