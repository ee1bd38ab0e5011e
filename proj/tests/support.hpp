#ifndef GRR_TESTS_SUPPORT_HPP
#define GRR_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <vector>

#include "grr/abgroup.hpp"

namespace grr::testsupport {

inline long rand_between(std::mt19937& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// A finite abelian group Z/t_1 + ... + Z/t_k with exhaustive element
// enumeration, used as an independent oracle for the lattice arithmetic.
struct FiniteAmbient {
    std::vector<long> orders; // each >= 1; order-1 factors are allowed filler

    size_t rank() const { return orders.size(); }

    FgGroup group() const {
        std::vector<std::vector<Int>> rels;
        for (size_t i = 0; i < orders.size(); ++i) {
            std::vector<Int> row(orders.size(), 0);
            row[i] = orders[i];
            rels.push_back(row);
        }
        return FgGroup(orders.size(), rels);
    }

    std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> c(rank());
        for (size_t i = 0; i < rank(); ++i) c[i] = (a[i] + b[i]) % orders[i];
        return c;
    }

    std::vector<std::vector<long>> all_elements() const {
        std::vector<std::vector<long>> out{std::vector<long>(rank(), 0)};
        for (size_t i = 0; i < rank(); ++i) {
            std::vector<std::vector<long>> next;
            for (const auto& base : out)
                for (long v = 0; v < orders[i]; ++v) {
                    auto e = base;
                    e[i] = v;
                    next.push_back(e);
                }
            out = std::move(next);
        }
        return out;
    }

    std::vector<long> random_element(std::mt19937& rng) const {
        std::vector<long> e(rank());
        for (size_t i = 0; i < rank(); ++i) e[i] = rand_between(rng, 0, orders[i] - 1);
        return e;
    }

    GroupElement lift(const FgGroup& g, const std::vector<long>& e) const {
        std::vector<Int> coords(e.begin(), e.end());
        return make_element(g, coords);
    }
};

// Closure of the generators under addition, always containing 0.
inline std::set<std::vector<long>> subgroup_closure(const FiniteAmbient& amb,
                                                    const std::vector<std::vector<long>>& gens) {
    std::set<std::vector<long>> seen{std::vector<long>(amb.rank(), 0)};
    std::vector<std::vector<long>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = amb.add(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen;
}

// In a finite group every submonoid is a subgroup, but the monoid closure is
// still computed by pure addition so it is an independent route.
inline std::set<std::vector<long>> monoid_closure(const FiniteAmbient& amb,
                                                  const std::vector<std::vector<long>>& gens) {
    return subgroup_closure(amb, gens);
}

inline std::set<std::vector<long>> elements_of(const FiniteAmbient& amb, const FgGroup& g,
                                               const Subgroup& h) {
    std::set<std::vector<long>> out;
    for (const auto& e : amb.all_elements())
        if (contains(h, amb.lift(g, e))) out.insert(e);
    return out;
}

// Random ambient with |G| <= max_order, at most 3 cyclic factors.
inline FiniteAmbient random_finite_ambient(std::mt19937& rng, long max_order) {
    FiniteAmbient amb;
    long total = 1;
    const size_t k = static_cast<size_t>(rand_between(rng, 1, 3));
    for (size_t i = 0; i < k; ++i) {
        long cap = max_order / total;
        if (cap < 2) {
            amb.orders.push_back(1 + rand_between(rng, 0, 1)); // 1 or 2 if room
            if (amb.orders.back() > cap) amb.orders.back() = 1;
        } else {
            amb.orders.push_back(rand_between(rng, 2, std::min(cap, 16l)));
        }
        total *= amb.orders.back();
    }
    return amb;
}

} // namespace grr::testsupport

#endif
