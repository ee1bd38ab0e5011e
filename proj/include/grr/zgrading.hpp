#ifndef GRR_ZGRADING_HPP
#define GRR_ZGRADING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grr/graded.hpp"

namespace grr {

// A Z-graded presentation: named generator degrees (negatives allowed) and
// prime witnesses in the same shape as the general graded module.
class ZPresentation {
public:
    ZPresentation(std::vector<std::pair<std::string, Int>> degrees,
                  std::vector<PrimeWitness> primes);

    const std::vector<std::pair<std::string, Int>>& degrees() const { return degrees_; }
    const std::vector<PrimeWitness>& primes() const { return primes_; }

private:
    std::vector<std::pair<std::string, Int>> degrees_;
    std::vector<PrimeWitness> primes_;
};

// Saturation index: gcd of the generator degrees (0 for the trivial grading).
Int e_of(const ZPresentation& p);

// gcd of the degrees of the generators outside the witness, i.e. the
// saturation index of the quotient by that prime.
Int e_quotient(const ZPresentation& p, size_t prime_index);

// Codimension-1 saturation index: lcm of e_quotient over the witnesses
// (lcm with 0 is 0); equals e_of when the witness list is empty.
Int ebar_of(const ZPresentation& p);

// m (+) n keeps exactly the prime powers p^{v_p(m)} of m with
// v_p(m) > v_p(n), where v_p(0) is infinite.  Requires m >= 1.
Int odiv(const Int& m, const Int& n);

// e(B^(d)) = lcm(e, d); ebar(B^(d)) = lcm(ebar, d) for noetherian normal B.
Int veronese_e(const Int& e, const Int& d);
Int veronese_ebar(const Int& ebar, const Int& d);

// A finite primitive set of positive integers encoding NR(B) as the union of
// the multiples of its elements, carried with the (e, ebar) context of the
// ambient ring.  Elements are kept sorted ascending.
struct MSet {
    std::vector<Int> elements;
    Int e;
    Int ebar;

    bool operator==(const MSet&) const = default;
};

MSet make_mset(std::vector<Int> elements, Int e, Int ebar);

// Whether d belongs to the encoded NR set (some element divides d).
bool nr_contains(const MSet& m, const Int& d);

// Canonical NR-equivalent index: gcd(d, ebar) when ebar != 0, else
// d (+) e.  nr_contains is invariant under this reduction.
Int nr_reduce(const Int& d, const Int& e, const Int& ebar);

struct MSetValidation {
    bool ok;
    std::string violation; // first violated law, empty when ok
};

MSetValidation mset_validate(const MSet& m);

// Under saturation (e == ebar) the NR set is all of N\{0} or empty; returns
// {1} or {} accordingly.  NotSaturated when e != ebar.
MSet saturated_dichotomy(const Int& e, const Int& ebar, bool any_nonrigid);

// NonRigid exactly when e != 0 and ebar == 0 (the degenerate case where the
// ring localizes to a polynomial ring in one variable); Unknown otherwise.
RigidityVerdict nonrigidity_verdict(const ZPresentation& p);

// In the degenerate case the M set is forced to {1}; nullopt when the
// presentation is not degenerate.
std::optional<MSet> forced_mset(const ZPresentation& p);

// The same presentation over the ambient group Z, for the general machinery.
GradedPresentation to_graded_presentation(const ZPresentation& p);

} // namespace grr

#endif
