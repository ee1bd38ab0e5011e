#include "grr/graded.hpp"

#include <set>

#include "grr/errors.hpp"

namespace grr {

GradedPresentation::GradedPresentation(
    FgGroup group, std::vector<std::pair<std::string, GroupElement>> generators,
    std::vector<PrimeWitness> primes)
    : group_(std::move(group)), generators_(std::move(generators)), primes_(std::move(primes)) {
    std::set<std::string> names;
    for (const auto& [name, degree] : generators_) {
        if (name.empty())
            throw Error("InvalidPresentation", "generator names must be nonempty");
        if (!names.insert(name).second)
            throw Error("InvalidPresentation", "duplicate generator name '" + name + "'");
        if (!(degree.owner == group_))
            throw Error("InvalidPresentation", "degree of '" + name + "' lies in another group");
    }
    for (const PrimeWitness& w : primes_) {
        if (w.contains.empty())
            throw Error("InvalidPresentation",
                        "prime witness must contain at least one generator");
        for (const std::string& n : w.contains)
            if (!names.count(n))
                throw Error("InvalidPresentation", "prime witness names unknown generator '" + n + "'");
    }
}

Subgroup gg(const GradedPresentation& p) {
    std::vector<GroupElement> degrees;
    degrees.reserve(p.generators().size());
    for (const auto& [name, degree] : p.generators()) degrees.push_back(degree);
    return subgroup_span(p.group(), degrees);
}

Subgroup mbar(const GradedPresentation& p, size_t prime_index) {
    if (prime_index >= p.primes().size())
        throw Error("IndexOutOfRange", "prime index out of range");
    const PrimeWitness& w = p.primes()[prime_index];
    std::set<std::string> inside(w.contains.begin(), w.contains.end());
    std::vector<GroupElement> outside_degrees;
    for (const auto& [name, degree] : p.generators())
        if (!inside.count(name)) outside_degrees.push_back(degree);
    return subgroup_span(p.group(), outside_degrees);
}

Subgroup gbar(const GradedPresentation& p) {
    if (p.primes().empty()) return gg(p);
    Subgroup acc = mbar(p, 0);
    for (size_t i = 1; i < p.primes().size(); ++i) acc = subgroup_intersect(acc, mbar(p, i));
    return acc;
}

bool is_saturated_codim1(const GradedPresentation& p) {
    return subgroup_eq(gbar(p), gg(p));
}

bool in_T(const GradedPresentation& p, const Subgroup& h) {
    if (!(h.owner() == p.group()))
        throw Error("OwnerMismatch", "subgroup does not live in the grading group");
    Subgroup g = gg(p);
    return quotient_is_torsion(subgroup_intersect(h, g), g);
}

Subgroup veronese_gg(const GradedPresentation& p, const Subgroup& h) {
    if (!in_T(p, h))
        throw Error("HNotInT", "the identity for the Veronese support group needs h in T");
    return subgroup_intersect(h, gg(p));
}

Subgroup veronese_gbar(const GradedPresentation& p, const Subgroup& h) {
    if (!in_T(p, h))
        throw Error("HNotInT", "the identity for the Veronese saturation needs h in T");
    return subgroup_intersect(h, gbar(p));
}

const char* to_string(Rigidity r) {
    switch (r) {
        case Rigidity::NonRigid: return "NonRigid";
        case Rigidity::Rigid: return "Rigid";
        case Rigidity::Unknown: return "Unknown";
    }
    return "Unknown";
}

MlBound ml_trdeg_lower_bound(const GradedPresentation& p) {
    Subgroup g = gg(p);
    Subgroup gb = gbar(p);
    return MlBound{quotient_rank(gb, g), torsion_closure(gb, g)};
}

RigidityVerdict nonrigidity_verdict(const GradedPresentation& p) {
    Subgroup g = gg(p);
    Subgroup gb = gbar(p);
    const char* contract =
        " (assumes: normal affine domain graded over a field of characteristic 0;"
        " prime witness list complete)";
    if (!quotient_is_torsion(gb, g)) {
        unsigned long r = quotient_rank(gb, g);
        return {Rigidity::NonRigid,
                "support group modulo its codimension-1 saturation has rank " +
                    std::to_string(r) + " > 0, which forces a nonzero locally nilpotent "
                    "derivation" + contract};
    }
    return {Rigidity::Unknown,
            "support group modulo its codimension-1 saturation is torsion; no "
            "sufficient condition for non-rigidity applies and rigidity is never "
            "certified at this generality" + std::string(contract)};
}

} // namespace grr
