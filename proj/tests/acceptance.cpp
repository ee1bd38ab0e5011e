// Acceptance suite: one line per criterion, [PASS]/[FAIL], exact tolerances,
// wall-clock budgets enforced.  Returns the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grr/errors.hpp"
#include "grr/json_io.hpp"
#include "grr/pb.hpp"
#include "support.hpp"

using namespace grr;
using namespace grr::testsupport;

#ifndef GRR_DATA_DIR
#error "GRR_DATA_DIR must point at the shipped presentations"
#endif

namespace {

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

std::string join_ints(const std::vector<Int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
    return s + "}";
}

// ---- criterion 1: the Z/42 worked example --------------------------------

bool criterion_z42(std::string& detail) {
    PresentationFile f = load_presentation_file(std::string(GRR_DATA_DIR) + "/z42.json");
    GradedPresentation p = to_graded_presentation(f);
    const FgGroup& g = p.group();
    Subgroup six = subgroup_span(g, {make_element(g, {6})});
    bool ok = true;
    ok &= expect(subgroup_eq(gbar(p), six), "gbar != <6>", detail);
    ok &= expect(subgroup_eq(gg(p), full_subgroup(g)), "gg != Z/42", detail);
    ok &= expect(!is_saturated_codim1(p), "reported saturated", detail);
    return ok;
}

// ---- criterion 2: closed form vs oracle over small Gamma_n ----------------

bool criterion_gamma_sweep(std::string& detail) {
    long checked = 0;
    auto sweep = [&](size_t n, long max_entry) {
        std::vector<long> idx(n, 2);
        for (;;) {
            std::vector<Int> a(idx.begin(), idx.end());
            PBTuple t(a);
            if (in_gamma(t)) {
                MSet cf = m_set_closed_form(t, false);
                MSet orc = m_set_oracle(t, false);
                if (!(cf == orc)) {
                    std::ostringstream os;
                    os << "disagreement at (";
                    for (size_t i = 0; i < n; ++i) os << (i ? "," : "") << idx[i];
                    os << "): closed " << join_ints(cf.elements) << " vs oracle "
                       << join_ints(orc.elements);
                    detail = os.str();
                    return false;
                }
                ++checked;
            }
            size_t pos = 0;
            while (pos < n && ++idx[pos] > max_entry) idx[pos++] = 2;
            if (pos == n) break;
        }
        return true;
    };
    if (!sweep(3, 12)) return false;
    if (!sweep(4, 8)) return false;
    bool ok = expect(checked > 3000, "sweep unexpectedly small", detail);
    if (ok) detail = std::to_string(checked) + " tuples";
    return ok;
}

// ---- criterion 3: named values ---------------------------------------------

bool criterion_named_values(std::string& detail) {
    bool ok = true;
    ok &= expect(m_set_oracle(PBTuple({3, 3, 3}), false).elements.empty(), "(3,3,3) M != {}",
                 detail);
    ok &= expect(m_set_oracle(PBTuple({1, 1, 1}), false).elements == std::vector<Int>{1},
                 "(1,1,1) M != {1}", detail);

    PBTuple r2(std::vector<Int>{2, 3, 4, 12});
    ok &= expect(rigidity_status(r2, false).status == Rigidity::Rigid, "(2,3,4,12) not Rigid",
                 detail);
    ok &= expect(derive(r2).ebar == 1, "(2,3,4,12) ebar != 1", detail);
    ok &= expect(m_set_oracle(r2, false).elements.empty(), "(2,3,4,12) M != {}", detail);

    ok &= expect(m_set_closed_form(PBTuple({4, 6, 10}), false).elements ==
                     std::vector<Int>({6, 10, 15}),
                 "(4,6,10) M != {6,10,15}", detail);

    PBTuple made = realize({3, 35});
    ok &= expect(m_set_oracle(made, false).elements == std::vector<Int>({3, 35}),
                 "realize({3,35}) not oracle-verified", detail);

    RealizedProducts rp = realize_products({2, 3, 5}, 0);
    ok &= expect(rp.predicted.elements == std::vector<Int>({6, 10, 15}),
                 "realize_products((2,3,5),0) prediction wrong", detail);
    ok &= expect(m_set_oracle(rp.tuple, false) == rp.predicted,
                 "realize_products((2,3,5),0) oracle disagrees", detail);
    return ok;
}

// ---- criterion 4: odiv laws -------------------------------------------------

bool criterion_odiv_laws(std::string& detail) {
    std::mt19937 rng(8880001);
    for (int iter = 0; iter < 1000; ++iter) {
        Int m = rand_between(rng, 1, 1000000);
        Int n = iter % 4 == 0 ? Int(0) : Int(rand_between(rng, 0, 1000000));
        Int o = odiv(m, n);
        std::string at = " at m=" + m.get_str() + ", n=" + n.get_str();
        if (!expect((o == 1) == (n % m == 0), "odiv=1 iff m|n fails" + at, detail)) return false;
        if (!expect(m % o == 0, "odiv | m fails" + at, detail)) return false;
        if (!expect(lcm(o, n) % m == 0, "m | lcm(odiv, n) fails" + at, detail)) return false;
        if (!expect(odiv(m, 1) == m, "m (+) 1 != m" + at, detail)) return false;
        if (!expect(odiv(m, 0) == 1, "m (+) 0 != 1" + at, detail)) return false;
    }
    return true;
}

// ---- criterion 5: cross-module consistency ---------------------------------

bool criterion_cross_module(std::string& detail) {
    std::mt19937 rng(5550001);
    FgGroup z = FgGroup::free_group(1);
    for (int iter = 0; iter < 500; ++iter) {
        const size_t n = static_cast<size_t>(rand_between(rng, 3, 6));
        std::vector<Int> a(n);
        for (size_t i = 0; i < n; ++i) a[i] = rand_between(rng, 1, 30);
        PBTuple t(a);
        PBInvariants inv = derive(t);
        ZPresentation zp = pb_to_zpresentation(t);
        std::string at = " at tuple " + join_ints(a);
        if (!expect(e_of(zp) == 1, "e_of != 1" + at, detail)) return false;
        if (!expect(ebar_of(zp) == inv.ebar, "ebar_of != derived ebar" + at, detail)) return false;

        GradedPresentation gp = to_graded_presentation(zp);
        Subgroup expected = subgroup_span(z, {make_element(z, {inv.ebar})});
        if (!expect(subgroup_eq(gbar(gp), expected), "gbar != ebar*Z" + at, detail)) return false;
        Subgroup support = subgroup_span(z, {make_element(z, {1})});
        if (!expect(subgroup_eq(gg(gp), support), "gg != Z" + at, detail)) return false;
    }
    return true;
}

// ---- criterion 6: abelian oracle equivalence + SNF contract ----------------

bool criterion_abelian_oracle(std::string& detail) {
    std::mt19937 rng(6660001);
    for (int iter = 0; iter < 200; ++iter) {
        FiniteAmbient amb = random_finite_ambient(rng, 200);
        FgGroup g = amb.group();

        auto random_gens = [&] {
            std::vector<std::vector<long>> gens;
            const size_t cnt = static_cast<size_t>(rand_between(rng, 0, 3));
            for (size_t i = 0; i < cnt; ++i) gens.push_back(amb.random_element(rng));
            return gens;
        };
        auto lift_all = [&](const std::vector<std::vector<long>>& gens) {
            std::vector<GroupElement> es;
            for (const auto& e : gens) es.push_back(amb.lift(g, e));
            return es;
        };

        auto ga = random_gens(), gb = random_gens();
        Subgroup a = subgroup_span(g, lift_all(ga));
        Subgroup b = subgroup_span(g, lift_all(gb));
        auto ea = subgroup_closure(amb, ga), eb = subgroup_closure(amb, gb);

        if (!expect(elements_of(amb, g, a) == ea, "span mismatch", detail)) return false;

        std::set<std::vector<long>> esum_gens(ea.begin(), ea.end());
        esum_gens.insert(eb.begin(), eb.end());
        auto esum = subgroup_closure(
            amb, std::vector<std::vector<long>>(esum_gens.begin(), esum_gens.end()));
        if (!expect(elements_of(amb, g, subgroup_sum(a, b)) == esum, "sum mismatch", detail))
            return false;

        std::set<std::vector<long>> emeet;
        for (const auto& x : ea)
            if (eb.count(x)) emeet.insert(x);
        if (!expect(elements_of(amb, g, subgroup_intersect(a, b)) == emeet, "intersect mismatch",
                    detail))
            return false;

        std::set<std::vector<long>> etorc;
        for (const auto& x : amb.all_elements()) {
            std::vector<long> acc(amb.rank(), 0);
            for (long mult = 1; mult <= 210; ++mult) {
                acc = amb.add(acc, x);
                if (ea.count(acc)) {
                    etorc.insert(x);
                    break;
                }
            }
        }
        if (!expect(elements_of(amb, g, torsion_closure(a, full_subgroup(g))) == etorc,
                    "torc mismatch", detail))
            return false;
    }

    std::uniform_int_distribution<int> dim(1, 6), entry(-50, 50);
    for (int iter = 0; iter < 500; ++iter) {
        Mat m(dim(rng), dim(rng));
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        SnfDecomposition d = smith_normal_form(m);
        if (!expect(d.u * m * d.v == d.s, "U*A*V != S", detail)) return false;
        if (!expect(abs(determinant(d.u)) == 1 && abs(determinant(d.v)) == 1,
                    "factors not unimodular", detail))
            return false;
        const size_t k = std::min(d.s.rows(), d.s.cols());
        for (size_t i = 0; i < k; ++i) {
            if (!expect(d.s.at(i, i) >= 0, "negative invariant factor", detail)) return false;
            if (i + 1 < k && d.s.at(i + 1, i + 1) != 0)
                if (!expect(d.s.at(i, i) != 0 && d.s.at(i + 1, i + 1) % d.s.at(i, i) == 0,
                            "divisibility chain broken", detail))
                    return false;
        }
    }
    return true;
}

// ---- criterion 7: lemma-law property suites --------------------------------

bool criterion_lemma_laws(std::string& detail) {
    std::mt19937 rng(7770001);

    // monoid-closure law on finite groups
    for (int iter = 0; iter < 200; ++iter) {
        FiniteAmbient amb = random_finite_ambient(rng, 150);
        FgGroup g = amb.group();
        std::vector<std::vector<long>> m0;
        const size_t cnt = static_cast<size_t>(rand_between(rng, 1, 3));
        for (size_t i = 0; i < cnt; ++i) m0.push_back(amb.random_element(rng));
        std::vector<std::vector<long>> hgens{amb.random_element(rng)};
        auto hset = subgroup_closure(amb, hgens);

        auto monoid = monoid_closure(amb, m0);
        std::vector<GroupElement> meet;
        for (const auto& e : monoid)
            if (hset.count(e)) meet.push_back(amb.lift(g, e));
        Subgroup lhs = subgroup_span(g, meet);

        std::vector<GroupElement> m0l, hl;
        for (const auto& e : m0) m0l.push_back(amb.lift(g, e));
        for (const auto& e : hgens) hl.push_back(amb.lift(g, e));
        Subgroup rhs = subgroup_intersect(subgroup_span(g, hl), subgroup_span(g, m0l));
        if (!expect(subgroup_eq(lhs, rhs), "monoid-closure law fails", detail)) return false;
    }

    // torc intersection law on lattice triples (h1, h2, k) with h_i <= k
    for (int iter = 0; iter < 200; ++iter) {
        const size_t rank = static_cast<size_t>(rand_between(rng, 1, 3));
        FgGroup g = FgGroup::free_group(rank);
        auto random_sub = [&] {
            std::vector<GroupElement> gens;
            const size_t cnt = static_cast<size_t>(rand_between(rng, 0, 3));
            for (size_t i = 0; i < cnt; ++i) {
                std::vector<Int> v(rank);
                for (size_t j = 0; j < rank; ++j) v[j] = rand_between(rng, -9, 9);
                gens.push_back(make_element(g, v));
            }
            return subgroup_span(g, gens);
        };
        Subgroup k = random_sub();
        auto random_inside = [&] {
            std::vector<GroupElement> gens;
            const size_t cnt = static_cast<size_t>(rand_between(rng, 0, 3));
            for (size_t c = 0; c < cnt; ++c) {
                std::vector<Int> v(rank, 0);
                for (size_t r = 0; r < k.lattice().rows(); ++r) {
                    Int coef = rand_between(rng, -4, 4);
                    for (size_t j = 0; j < rank; ++j) v[j] += coef * k.lattice().at(r, j);
                }
                gens.push_back(make_element(g, v));
            }
            return subgroup_span(g, gens);
        };
        Subgroup h1 = random_inside(), h2 = random_inside();
        Subgroup lhs = subgroup_intersect(torsion_closure(h1, k), torsion_closure(h2, k));
        Subgroup rhs = torsion_closure(subgroup_intersect(h1, h2), k);
        if (!expect(subgroup_eq(lhs, rhs), "torc intersection law fails", detail)) return false;
    }

    // Veronese index identities against a multiple-scan lcm oracle
    auto lcm_oracle = [](const Int& x, const Int& d) {
        if (x == 0) return Int(0);
        Int m = d;
        while (m % x != 0) m += d;
        return m;
    };
    for (int iter = 0; iter < 500; ++iter) {
        Int e = rand_between(rng, 0, 60);
        Int ebar = e == 0 ? Int(0) : e * rand_between(rng, 1, 40);
        Int d = rand_between(rng, 1, 60);
        std::string at = " at e=" + e.get_str() + ", ebar=" + ebar.get_str() +
                         ", d=" + d.get_str();
        if (!expect(veronese_e(e, d) == lcm_oracle(e, d), "e identity fails" + at, detail))
            return false;
        if (!expect(veronese_ebar(ebar, d) == lcm_oracle(ebar, d), "ebar identity fails" + at,
                    detail))
            return false;
    }
    return true;
}

// ---- criterion 8: the degenerate Z-grading ---------------------------------

bool criterion_degenerate(std::string& detail) {
    PresentationFile f = load_presentation_file(std::string(GRR_DATA_DIR) + "/uyvx.json");
    ZPresentation z = to_zpresentation(f);
    bool ok = true;
    ok &= expect(e_of(z) == 1, "e != 1", detail);
    ok &= expect(ebar_of(z) == 0, "ebar != 0", detail);
    ok &= expect(nonrigidity_verdict(z).status == Rigidity::NonRigid, "z verdict not NonRigid",
                 detail);
    GradedPresentation p = to_graded_presentation(f);
    ok &= expect(ml_trdeg_lower_bound(p).r == 1, "ml bound != 1", detail);
    ok &= expect(nonrigidity_verdict(p).status == Rigidity::NonRigid,
                 "graded verdict not NonRigid", detail);
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Z/42 worked example: gbar = <6>, gg full, not saturated", 0.1, criterion_z42},
        {2, "closed form equals oracle on Gamma_3 (<=12) and Gamma_4 (<=8)", 60.0,
         criterion_gamma_sweep},
        {3, "named values: (3,3,3), (1,1,1), (2,3,4,12), (4,6,10), realize", 10.0,
         criterion_named_values},
        {4, "odiv laws on 1000 random pairs", 1.0, criterion_odiv_laws},
        {5, "cross-module consistency on 500 random tuples", 10.0, criterion_cross_module},
        {6, "abelian ops vs exhaustive oracles; SNF contract on 500 matrices", 30.0,
         criterion_abelian_oracle},
        {7, "monoid-closure, torc-intersection and Veronese index laws", 30.0,
         criterion_lemma_laws},
        {8, "degenerate Z-grading: e=1, ebar=0, r=1, NonRigid", 0.1, criterion_degenerate},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.budget_seconds) {
            ok = false;
            detail = "over budget (" + std::to_string(secs) + "s > " +
                     std::to_string(c.budget_seconds) + "s)";
        }
        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << " (" << std::fixed;
        line.precision(3);
        line << secs << "s): " << c.label;
        if (!detail.empty()) line << " -- " << detail;
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures;
}
