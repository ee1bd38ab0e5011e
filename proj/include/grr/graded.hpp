#ifndef GRR_GRADED_HPP
#define GRR_GRADED_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grr/abgroup.hpp"

namespace grr {

// The generators lying in one height-1 prime of the presented ring.  The
// invariants of the presentation (gbar in particular) are computed from the
// witness list as given; they are only meaningful if the list covers every
// height-1 prime that meets the generating set.
struct PrimeWitness {
    std::vector<std::string> contains;

    bool operator==(const PrimeWitness&) const = default;
};

// A graded-domain presentation: an ambient grading group, homogeneous
// generators with their degrees, and the prime witnesses.  Validated on
// construction; immutable afterwards.
class GradedPresentation {
public:
    GradedPresentation(FgGroup group,
                       std::vector<std::pair<std::string, GroupElement>> generators,
                       std::vector<PrimeWitness> primes);

    const FgGroup& group() const { return group_; }
    const std::vector<std::pair<std::string, GroupElement>>& generators() const {
        return generators_;
    }
    const std::vector<PrimeWitness>& primes() const { return primes_; }

private:
    FgGroup group_;
    std::vector<std::pair<std::string, GroupElement>> generators_;
    std::vector<PrimeWitness> primes_;
};

// Subgroup generated by all generator degrees.
Subgroup gg(const GradedPresentation& p);

// Subgroup generated by the degrees of the generators outside the witness.
Subgroup mbar(const GradedPresentation& p, size_t prime_index);

// Intersection of mbar over all witnesses; gg when the witness list is empty.
Subgroup gbar(const GradedPresentation& p);

bool is_saturated_codim1(const GradedPresentation& p);

// Whether gg(p) / (h intersect gg(p)) is torsion.
bool in_T(const GradedPresentation& p, const Subgroup& h);

// h intersect gg(p); only asserted for h in T (HNotInT otherwise).
Subgroup veronese_gg(const GradedPresentation& p, const Subgroup& h);

// h intersect gbar(p); same precondition, and the identity additionally
// assumes the presented ring is noetherian and normal (not verified).
Subgroup veronese_gbar(const GradedPresentation& p, const Subgroup& h);

enum class Rigidity { NonRigid, Rigid, Unknown };
const char* to_string(Rigidity r);

struct RigidityVerdict {
    Rigidity status;
    std::string reason;
};

struct MlBound {
    unsigned long r; // lower bound for trdeg over the Makar-Limanov invariant
    Subgroup w;      // torsion closure of gbar in gg
};

// r = rank(gg/gbar) and W = torc(gbar, gg).  Assumes a normal affine domain
// graded over a field of characteristic 0 (caller-asserted).
MlBound ml_trdeg_lower_bound(const GradedPresentation& p);

// NonRigid when gg/gbar is not torsion; Unknown otherwise (rigidity is never
// certified at this generality).
RigidityVerdict nonrigidity_verdict(const GradedPresentation& p);

} // namespace grr

#endif
