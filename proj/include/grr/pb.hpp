#ifndef GRR_PB_HPP
#define GRR_PB_HPP

#include <cstddef>
#include <vector>

#include "grr/zgrading.hpp"

namespace grr {

// An exponent tuple (a_1, ..., a_n), n >= 3, all entries >= 1.  The ring it
// presents is the hypersurface X_1^{a_1} + ... + X_n^{a_n} = 0 with X_i
// homogeneous of degree L / a_i.
class PBTuple {
public:
    explicit PBTuple(std::vector<Int> a);

    const std::vector<Int>& entries() const { return a_; }
    size_t n() const { return a_.size(); }

    bool operator==(const PBTuple&) const = default;

private:
    std::vector<Int> a_;
};

// Derived quantities of a tuple.  Index sets are 1-based, following the
// usual convention for exponent tuples.
struct PBInvariants {
    Int big_l;                 // lcm of all entries
    std::vector<Int> l;        // l[i] = lcm of the entries other than a_{i+1}
    std::vector<Int> d;        // d[i] = big_l / a_{i+1}, the generator degrees
    std::vector<size_t> s_set; // 1-based positions with l[i] != big_l, ascending
    size_t cotype;             // |s_set|
    Int e;                     // always 1
    Int ebar;                  // product of big_l / l[i]
};

PBInvariants derive(const PBTuple& t);

// min(a) > 1 and at most one entry equals 2.
bool in_gamma(const PBTuple& t);

// NonRigid outside Gamma_n; Rigid for Gamma_n tuples with n <= 4 or
// cotype >= n-2; Rigid under the conjecture flag; Unknown otherwise.
RigidityVerdict rigidity_status(const PBTuple& t, bool assume_conjecture);

// The tuple of the d-th Veronese subring, for d dividing ebar:
// a_i' = gcd(a_i, L_i) * (L/L_i) / gcd(d, L/L_i).  Satisfies
// a_i = a_i' * gcd(d, L/L_i) and f(1) = a.
PBTuple f_map(const PBTuple& t, const Int& d);

// Alias of f_map: the d-th Veronese subring is again a Pham-Brieskorn ring
// with exponents f(d), up to an isomorphism that preserves rigidity status.
PBTuple veronese_pb(const PBTuple& t, const Int& d);

// Closed-form M set from the index classes I_1 = { i : gcd(a_i, L_i) = 1 }
// and I_2 = { i : gcd(a_i, L_i) = 2 }.  Requires a Gamma_n tuple whose
// Veronese tuples f(d) in Gamma_n all have a decided Rigid status
// (HypothesisUnverified lists the offending divisors otherwise).
MSet m_set_closed_form(const PBTuple& t, bool assume_conjecture);

// Independent brute force: enumerate the divisors d of ebar, mark those with
// a NonRigid Veronese tuple, and keep the divisibility-maximal ones.
// Non-Gamma tuples short-circuit to {1}.  jobs > 1 splits the divisor sweep
// across threads; the result is assembled deterministically.
MSet m_set_oracle(const PBTuple& t, bool assume_conjecture, unsigned jobs = 1);

// A tuple whose M set is exactly the given finite set of pairwise coprime
// elements (primitive, so {1} only alone): {} -> (3,3,3), {1} -> (1,1,1),
// otherwise the sorted elements followed by c, c for the least c >= 3
// coprime to all of them.
PBTuple realize(const std::vector<Int>& y);

struct RealizedProducts {
    PBTuple tuple;
    MSet predicted;
};

// The tuple (l_1, ..., l_m, 2 l_{m+1}, ..., 2 l_n) for pairwise coprime
// l_i >= 2 with l_1, ..., l_m odd and 0 <= m <= n-2, together with its
// predicted M set {l_1, ..., l_m} union { l_j l_k : m+1 <= j < k <= n }.
RealizedProducts realize_products(const std::vector<Int>& l, size_t m);

// 1-based positions i with s_set contained in {i}: all of them for cotype 0,
// the single member of s_set for cotype 1, none for larger cotype.  n >= 4.
std::vector<size_t> admissible_indices(const PBTuple& t);

// Generator degrees d_i with one single-variable prime witness per
// coordinate.  (The witness class containing no generator has quotient
// index e(B) and never shrinks the lcm, so it is omitted.)
ZPresentation pb_to_zpresentation(const PBTuple& t);

} // namespace grr

#endif
