#ifndef GRR_ABGROUP_HPP
#define GRR_ABGROUP_HPP

#include <vector>

#include "grr/matrix.hpp"

namespace grr {

// A finitely generated abelian group presented as Z^k modulo a relation
// lattice.  The relation lattice is stored in Hermite form, so two groups
// compare equal exactly when they present the same quotient of the same Z^k.
// All values are immutable after construction.
class FgGroup {
public:
    FgGroup(size_t ambient_rank, const std::vector<std::vector<Int>>& relations);

    static FgGroup free_group(size_t rank);
    static FgGroup cyclic(const Int& order);
    // Z^free_rank + Z/t_1 + ... + Z/t_m, coordinates in that order.
    static FgGroup direct_sum(size_t free_rank, const std::vector<Int>& torsion_orders);

    size_t ambient_rank() const { return rank_; }
    const Mat& relations() const { return relations_; }

    // Canonical coset representative of a lift (reduced modulo the relation
    // lattice at its pivot columns).
    std::vector<Int> reduce(std::vector<Int> coords) const;

    bool operator==(const FgGroup& rhs) const = default;

private:
    size_t rank_;
    Mat relations_;
};

struct GroupElement {
    GroupElement(FgGroup owner, std::vector<Int> coords);

    FgGroup owner;
    std::vector<Int> coords;
};

GroupElement make_element(const FgGroup& g, std::vector<Int> coords);

// A subgroup of an FgGroup, held as the integer lattice L with
// relations <= L <= Z^k, canonicalized by Hermite normal form.  Equality of
// subgroups is equality of canonical lattices.
class Subgroup {
public:
    const FgGroup& owner() const { return owner_; }
    const Mat& lattice() const { return lattice_; }

    bool operator==(const Subgroup& rhs) const = default;

private:
    Subgroup(FgGroup owner, Mat canonical_lattice)
        : owner_(std::move(owner)), lattice_(std::move(canonical_lattice)) {}

    FgGroup owner_;
    Mat lattice_;

    friend Subgroup subgroup_from_lattice(const FgGroup&, const Mat&);
};

// Subgroup generated by the given lattice vectors together with the
// relation lattice.
Subgroup subgroup_from_lattice(const FgGroup& g, const Mat& generators);

Subgroup subgroup_span(const FgGroup& g, const std::vector<GroupElement>& elements);
Subgroup zero_subgroup(const FgGroup& g);
Subgroup full_subgroup(const FgGroup& g);

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b);

bool subgroup_leq(const Subgroup& a, const Subgroup& b);
bool subgroup_eq(const Subgroup& a, const Subgroup& b);
bool contains(const Subgroup& a, const GroupElement& x);

// big/small is torsion iff the two lattices have equal rank.
bool quotient_is_torsion(const Subgroup& small, const Subgroup& big);

// dim_Q of Q tensor (big/small).
unsigned long quotient_rank(const Subgroup& small, const Subgroup& big);

// torc(h, k) = { x in k : m x in h for some m >= 1 }.
Subgroup torsion_closure(const Subgroup& h, const Subgroup& k);

// Isomorphism type free_rank + sum of Z/d_i (d_i > 1, divisibility chain).
struct GroupStructure {
    unsigned long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const GroupStructure&) const = default;
};

// Structure of the subgroup itself (L / relations).
GroupStructure subgroup_structure(const Subgroup& h);

// Structure of the quotient of the ambient group by the subgroup (Z^k / L).
GroupStructure quotient_structure(const Subgroup& h);

} // namespace grr

#endif
