#include "grr/bigint.hpp"

#include <algorithm>
#include <cstdint>

#include "grr/errors.hpp"

namespace grr {

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

Int lcm_all(const std::vector<Int>& xs) {
    Int m = 1;
    for (const Int& x : xs) m = lcm(m, x);
    return m;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

unsigned long valuation(Int n, const Int& p) {
    if (n == 0) throw Error("PreconditionViolation", "valuation of 0 is infinite");
    unsigned long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

bool fits_uint64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Pollard rho (Brent variant).  n must be composite and odd.
uint64_t pollard_rho(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_u64(d, primes);
    factor_u64(n / d, primes);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n < 1) throw Error("PreconditionViolation", "factorize requires n >= 1");
    if (!fits_uint64(n))
        throw Error("DiagnosticTooLarge",
                    "value " + n.get_str() + " exceeds the 64-bit factorization limit");
    uint64_t v = 0;
    for (size_t i = 0, limbs = mpz_size(n.get_mpz_t()); i < limbs; ++i)
        v |= static_cast<uint64_t>(mpz_getlimbn(n.get_mpz_t(), i)) << (i * GMP_NUMB_BITS);

    std::vector<uint64_t> primes;
    // strip small primes first, then rho on the cofactor
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (v % p == 0) {
            primes.push_back(p);
            v /= p;
        }
    }
    factor_u64(v, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<std::pair<Int, unsigned>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == Int(static_cast<unsigned long>(p)))
            ++out.back().second;
        else
            out.emplace_back(Int(static_cast<unsigned long>(p)), 1u);
    }
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factorize(n);
    std::vector<Int> ds{1};
    for (const auto& [p, e] : fac) {
        const size_t sz = ds.size();
        Int pe = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pe *= p;
            for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

} // namespace grr
