#include "grr/pb.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "grr/errors.hpp"

namespace grr {

PBTuple::PBTuple(std::vector<Int> a) : a_(std::move(a)) {
    if (a_.size() < 3) throw Error("InvalidTuple", "an exponent tuple needs n >= 3 entries");
    for (const Int& x : a_)
        if (x < 1) throw Error("InvalidTuple", "exponents must be >= 1");
}

PBInvariants derive(const PBTuple& t) {
    const auto& a = t.entries();
    const size_t n = a.size();
    PBInvariants inv;
    inv.big_l = lcm_all(a);
    inv.l.resize(n);
    inv.d.resize(n);
    for (size_t i = 0; i < n; ++i) {
        Int li = 1;
        for (size_t j = 0; j < n; ++j)
            if (j != i) li = lcm(li, a[j]);
        inv.l[i] = li;
        inv.d[i] = inv.big_l / a[i];
        if (li != inv.big_l) inv.s_set.push_back(i + 1);
    }
    inv.cotype = inv.s_set.size();
    inv.e = gcd_all(inv.d);
    inv.ebar = 1;
    for (size_t i = 0; i < n; ++i) inv.ebar *= inv.big_l / inv.l[i];
    return inv;
}

bool in_gamma(const PBTuple& t) {
    size_t twos = 0;
    for (const Int& x : t.entries()) {
        if (x == 1) return false;
        if (x == 2) ++twos;
    }
    return twos <= 1;
}

RigidityVerdict rigidity_status(const PBTuple& t, bool assume_conjecture) {
    const size_t n = t.n();
    if (!in_gamma(t))
        return {Rigidity::NonRigid,
                "some exponent is 1 or at least two exponents equal 2; such "
                "hypersurfaces always carry a nonzero locally nilpotent derivation"};
    if (n <= 4)
        return {Rigidity::Rigid, "rigidity of admissible tuples is established for n <= 4"};
    PBInvariants inv = derive(t);
    if (inv.cotype >= n - 2)
        return {Rigidity::Rigid,
                "cotype " + std::to_string(inv.cotype) + " >= n-2 forces rigidity"};
    if (assume_conjecture)
        return {Rigidity::Rigid,
                "assumed by the conjecture that admissible tuples are rigid "
                "(assume_conjecture set)"};
    return {Rigidity::Unknown,
            "admissible tuple with n >= 5 and cotype < n-2; rigidity is conjectural"};
}

PBTuple f_map(const PBTuple& t, const Int& d) {
    PBInvariants inv = derive(t);
    if (d < 1 || !mpz_divisible_p(inv.ebar.get_mpz_t(), d.get_mpz_t()))
        throw Error("NotADivisor",
                    "d = " + d.get_str() + " does not divide ebar = " + inv.ebar.get_str());
    const auto& a = t.entries();
    std::vector<Int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Int q = inv.big_l / inv.l[i];
        out[i] = gcd(a[i], inv.l[i]) * (q / gcd(d, q));
    }
    return PBTuple(std::move(out));
}

PBTuple veronese_pb(const PBTuple& t, const Int& d) {
    return f_map(t, d);
}

namespace {

// Verdicts for the Veronese tuple of every divisor of ebar, in divisor
// order.  Shared by the closed form's hypothesis check and the oracle.
std::vector<Rigidity> divisor_sweep(const PBTuple& t, const std::vector<Int>& divs,
                                    bool assume_conjecture, unsigned jobs) {
    std::vector<Rigidity> status(divs.size());
    auto run = [&](const PBTuple& tuple, size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i)
            status[i] = rigidity_status(f_map(tuple, divs[i]), assume_conjecture).status;
    };
    if (jobs <= 1 || divs.size() < 2 * jobs) {
        run(t, 0, divs.size());
        return status;
    }
    std::vector<std::thread> pool;
    const size_t chunk = (divs.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        size_t begin = w * chunk;
        size_t end = std::min(divs.size(), begin + chunk);
        if (begin >= end) break;
        // each worker gets its own copy of the tuple; GMP values are not
        // shared across threads
        pool.emplace_back([&, begin, end, tuple = t] { run(tuple, begin, end); });
    }
    for (auto& th : pool) th.join();
    return status;
}

void require_hypothesis(const std::vector<Int>& divs, const std::vector<Rigidity>& status) {
    std::string offending;
    for (size_t i = 0; i < divs.size(); ++i)
        if (status[i] == Rigidity::Unknown)
            offending += (offending.empty() ? "" : ", ") + divs[i].get_str();
    if (!offending.empty())
        throw Error("HypothesisUnverified",
                    "rigidity of the Veronese tuples for divisors {" + offending +
                        "} is undecided; rerun with assume_conjecture to apply the conjecture");
}

} // namespace

MSet m_set_closed_form(const PBTuple& t, bool assume_conjecture) {
    if (!in_gamma(t))
        throw Error("NotGamma", "the closed form only applies to admissible tuples");
    PBInvariants inv = derive(t);
    std::vector<Int> divs = divisors(inv.ebar);
    require_hypothesis(divs, divisor_sweep(t, divs, assume_conjecture, 1));

    const auto& a = t.entries();
    std::vector<size_t> i1, i2;
    size_t i0 = 0;
    bool have_i0 = false;
    for (size_t i = 0; i < a.size(); ++i) {
        Int g = gcd(a[i], inv.l[i]);
        if (g == 1) i1.push_back(i);
        if (g == 2) {
            i2.push_back(i);
            if (a[i] == 2) {
                i0 = i;
                have_i0 = true;
            }
        }
    }
    std::set<Int> out;
    for (size_t i : i1) out.insert(a[i]);
    if (have_i0) {
        for (size_t i : i2)
            if (i != i0) out.insert(a[i] / 2);
    } else {
        for (size_t x = 0; x < i2.size(); ++x)
            for (size_t y = x + 1; y < i2.size(); ++y)
                out.insert(a[i2[x]] * a[i2[y]] / 4);
    }
    return make_mset(std::vector<Int>(out.begin(), out.end()), 1, inv.ebar);
}

MSet m_set_oracle(const PBTuple& t, bool assume_conjecture, unsigned jobs) {
    PBInvariants inv = derive(t);
    if (!in_gamma(t)) return make_mset({1}, 1, inv.ebar);

    std::vector<Int> divs = divisors(inv.ebar);
    std::vector<Rigidity> status = divisor_sweep(t, divs, assume_conjecture, jobs);
    require_hypothesis(divs, status);

    std::vector<Int> nr;
    for (size_t i = 0; i < divs.size(); ++i)
        if (status[i] == Rigidity::NonRigid) nr.push_back(divs[i]);

    // divisibility-maximal members: nothing in NR strictly divides them
    std::vector<Int> maximal;
    for (const Int& d : nr) {
        bool keep = true;
        for (const Int& d2 : nr)
            if (d2 != d && mpz_divisible_p(d.get_mpz_t(), d2.get_mpz_t())) {
                keep = false;
                break;
            }
        if (keep) maximal.push_back(d);
    }
    return make_mset(std::move(maximal), 1, inv.ebar);
}

PBTuple realize(const std::vector<Int>& y) {
    std::set<Int> ys(y.begin(), y.end());
    for (const Int& x : ys)
        if (x < 1) throw Error("NotPrimitive", "set elements must be positive");
    for (const Int& x : ys)
        for (const Int& z : ys)
            if (x != z && mpz_divisible_p(z.get_mpz_t(), x.get_mpz_t()))
                throw Error("NotPrimitive",
                            x.get_str() + " divides " + z.get_str() + "; the set is not primitive");
    for (const Int& x : ys)
        for (const Int& z : ys)
            if (x < z && gcd(x, z) != 1)
                throw Error("NotPairwiseCoprime",
                            x.get_str() + " and " + z.get_str() + " share a factor");

    if (ys.empty()) return PBTuple({3, 3, 3});
    if (ys.size() == 1 && *ys.begin() == 1) return PBTuple({1, 1, 1});

    std::vector<Int> tuple(ys.begin(), ys.end());
    Int c = 3;
    auto coprime_to_all = [&](const Int& v) {
        for (const Int& x : tuple)
            if (gcd(v, x) != 1) return false;
        return true;
    };
    while (!coprime_to_all(c)) ++c;
    tuple.push_back(c);
    tuple.push_back(c);
    return PBTuple(std::move(tuple));
}

RealizedProducts realize_products(const std::vector<Int>& l, size_t m) {
    const size_t n = l.size();
    if (n < 3) throw Error("TooFewFactors", "need at least three factors");
    if (m > n - 2)
        throw Error("BadSplit", "m = " + std::to_string(m) + " exceeds n-2 = " +
                                    std::to_string(n - 2));
    for (const Int& x : l)
        if (x < 2) throw Error("FactorTooSmall", "factors must be >= 2");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gcd(l[i], l[j]) != 1)
                throw Error("NotPairwiseCoprime",
                            l[i].get_str() + " and " + l[j].get_str() + " share a factor");
    for (size_t i = 0; i < m; ++i)
        if (l[i] % 2 == 0)
            throw Error("NotOdd", "the first m factors must be odd (" + l[i].get_str() + ")");

    std::vector<Int> tuple;
    tuple.reserve(n);
    for (size_t i = 0; i < m; ++i) tuple.push_back(l[i]);
    for (size_t i = m; i < n; ++i) tuple.push_back(2 * l[i]);
    PBTuple t(std::move(tuple));

    std::vector<Int> predicted;
    for (size_t i = 0; i < m; ++i) predicted.push_back(l[i]);
    for (size_t j = m; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) predicted.push_back(l[j] * l[k]);
    MSet mset = make_mset(std::move(predicted), 1, derive(t).ebar);
    return RealizedProducts{std::move(t), std::move(mset)};
}

std::vector<size_t> admissible_indices(const PBTuple& t) {
    if (t.n() < 4)
        throw Error("PreconditionViolation", "admissible index query needs n >= 4");
    PBInvariants inv = derive(t);
    if (inv.cotype == 0) {
        std::vector<size_t> all(t.n());
        for (size_t i = 0; i < t.n(); ++i) all[i] = i + 1;
        return all;
    }
    if (inv.cotype == 1) return inv.s_set;
    return {};
}

ZPresentation pb_to_zpresentation(const PBTuple& t) {
    PBInvariants inv = derive(t);
    std::vector<std::pair<std::string, Int>> degrees;
    std::vector<PrimeWitness> primes;
    for (size_t i = 0; i < t.n(); ++i) {
        std::string name = "x" + std::to_string(i + 1);
        degrees.emplace_back(name, inv.d[i]);
        primes.push_back(PrimeWitness{{name}});
    }
    return ZPresentation(std::move(degrees), std::move(primes));
}

} // namespace grr
