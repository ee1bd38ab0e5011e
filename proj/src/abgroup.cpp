#include "grr/abgroup.hpp"

#include <utility>

#include "grr/errors.hpp"

namespace grr {

FgGroup::FgGroup(size_t ambient_rank, const std::vector<std::vector<Int>>& relations)
    : rank_(ambient_rank),
      relations_(hermite_normal_form(Mat::from_rows(relations, ambient_rank))) {}

FgGroup FgGroup::free_group(size_t rank) {
    return FgGroup(rank, {});
}

FgGroup FgGroup::cyclic(const Int& order) {
    if (order < 2) throw Error("PreconditionViolation", "cyclic group order must be >= 2");
    return FgGroup(1, {{order}});
}

FgGroup FgGroup::direct_sum(size_t free_rank, const std::vector<Int>& torsion_orders) {
    const size_t k = free_rank + torsion_orders.size();
    std::vector<std::vector<Int>> rels;
    for (size_t i = 0; i < torsion_orders.size(); ++i) {
        if (torsion_orders[i] < 2)
            throw Error("PreconditionViolation", "torsion orders must be >= 2");
        std::vector<Int> row(k);
        row[free_rank + i] = torsion_orders[i];
        rels.push_back(std::move(row));
    }
    return FgGroup(k, rels);
}

std::vector<Int> FgGroup::reduce(std::vector<Int> coords) const {
    if (coords.size() != rank_) throw Error("DimensionMismatch", "coordinate length mismatch");
    const Mat& h = relations_;
    for (size_t r = 0; r < h.rows(); ++r) {
        size_t c = 0;
        while (c < h.cols() && h.at(r, c) == 0) ++c;
        Int q = floor_div(coords[c], h.at(r, c));
        if (q != 0)
            for (size_t j = 0; j < rank_; ++j) coords[j] -= q * h.at(r, j);
    }
    return coords;
}

GroupElement::GroupElement(FgGroup owner_group, std::vector<Int> coordinates)
    : owner(std::move(owner_group)), coords(std::move(coordinates)) {
    if (coords.size() != owner.ambient_rank())
        throw Error("DimensionMismatch", "element length mismatch with ambient rank");
}

GroupElement make_element(const FgGroup& g, std::vector<Int> coords) {
    return GroupElement(g, std::move(coords));
}

Subgroup subgroup_from_lattice(const FgGroup& g, const Mat& generators) {
    if (generators.rows() != 0 && generators.cols() != g.ambient_rank())
        throw Error("DimensionMismatch", "lattice vectors do not match ambient rank");
    Mat gens = generators.rows() == 0 ? Mat(0, g.ambient_rank()) : generators;
    return Subgroup(g, hermite_normal_form(stack(gens, g.relations())));
}

Subgroup subgroup_span(const FgGroup& g, const std::vector<GroupElement>& elements) {
    Mat gens(elements.size(), g.ambient_rank());
    for (size_t i = 0; i < elements.size(); ++i) {
        if (!(elements[i].owner == g))
            throw Error("OwnerMismatch", "element does not belong to the given group");
        gens.set_row(i, elements[i].coords);
    }
    return subgroup_from_lattice(g, gens);
}

Subgroup zero_subgroup(const FgGroup& g) {
    return subgroup_from_lattice(g, Mat(0, g.ambient_rank()));
}

Subgroup full_subgroup(const FgGroup& g) {
    return subgroup_from_lattice(g, Mat::identity(g.ambient_rank()));
}

namespace {

void require_same_owner(const Subgroup& a, const Subgroup& b) {
    if (!(a.owner() == b.owner()))
        throw Error("OwnerMismatch", "subgroups of different groups");
}

} // namespace

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
    require_same_owner(a, b);
    return subgroup_from_lattice(a.owner(), stack(a.lattice(), b.lattice()));
}

Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b) {
    require_same_owner(a, b);
    return subgroup_from_lattice(a.owner(), lattice_intersection(a.lattice(), b.lattice()));
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
    require_same_owner(a, b);
    for (size_t i = 0; i < a.lattice().rows(); ++i)
        if (!coords_in_hnf(b.lattice(), a.lattice().row(i))) return false;
    return true;
}

bool subgroup_eq(const Subgroup& a, const Subgroup& b) {
    require_same_owner(a, b);
    return a.lattice() == b.lattice();
}

bool contains(const Subgroup& a, const GroupElement& x) {
    if (!(x.owner == a.owner()))
        throw Error("OwnerMismatch", "element does not belong to the subgroup's group");
    return coords_in_hnf(a.lattice(), x.coords).has_value();
}

bool quotient_is_torsion(const Subgroup& small, const Subgroup& big) {
    if (!subgroup_leq(small, big))
        throw Error("PreconditionViolation", "quotient_is_torsion requires small <= big");
    return small.lattice().rows() == big.lattice().rows();
}

unsigned long quotient_rank(const Subgroup& small, const Subgroup& big) {
    if (!subgroup_leq(small, big))
        throw Error("PreconditionViolation", "quotient_rank requires small <= big");
    return big.lattice().rows() - small.lattice().rows();
}

Subgroup torsion_closure(const Subgroup& h, const Subgroup& k) {
    if (!subgroup_leq(h, k))
        throw Error("PreconditionViolation", "torsion_closure requires h <= k");
    Mat sat = saturation(h.lattice());
    Mat met = lattice_intersection(sat, k.lattice());
    return subgroup_from_lattice(h.owner(), met);
}

namespace {

GroupStructure structure_from_diag(const std::vector<Int>& diag, unsigned long free_rank) {
    GroupStructure s;
    s.free_rank = free_rank;
    for (const Int& d : diag)
        if (d > 1) s.torsion.push_back(d);
    return s;
}

} // namespace

GroupStructure subgroup_structure(const Subgroup& h) {
    const Mat& lam = h.owner().relations();
    const Mat& lat = h.lattice();
    // Express the relation basis in the subgroup's basis; the Smith diagonal
    // of that coordinate matrix gives the torsion of L / relations.
    Mat coords(lam.rows(), lat.rows());
    for (size_t i = 0; i < lam.rows(); ++i) {
        auto c = coords_in_hnf(lat, lam.row(i));
        if (!c) throw Error("PreconditionViolation", "relations not contained in lattice");
        coords.set_row(i, *c);
    }
    return structure_from_diag(snf_diagonal(coords), lat.rows() - lam.rows());
}

GroupStructure quotient_structure(const Subgroup& h) {
    return structure_from_diag(snf_diagonal(h.lattice()),
                               h.owner().ambient_rank() - h.lattice().rows());
}

} // namespace grr
