#pragma once

// Independent reference computations for the unit tests: GMP for exact
// big-integer arithmetic, and naive O(k) recurrences and enumerations.
// Nothing here calls into the library.

#include <gmp.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

class Mpz {
public:
    Mpz() { mpz_init(v_); }
    explicit Mpz(std::uint64_t x) {
        mpz_init(v_);
        mpz_import(v_, 1, 1, sizeof x, 0, 0, &x);
    }
    Mpz(const Mpz&) = delete;
    Mpz& operator=(const Mpz&) = delete;
    ~Mpz() { mpz_clear(v_); }

    mpz_ptr get() { return v_; }
    mpz_srcptr get() const { return v_; }

    std::uint64_t to_u64() const {
        std::uint64_t out = 0;
        std::size_t count = 0;
        mpz_export(&out, &count, 1, sizeof out, 0, 0, v_);
        return count == 0 ? 0 : out;
    }

private:
    mpz_t v_;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    Mpz x(a), y(b), m(n), r;
    mpz_mul(r.get(), x.get(), y.get());
    mpz_mod(r.get(), r.get(), m.get());
    return r.to_u64();
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    Mpz x(a), k(e), m(n), r;
    mpz_powm(r.get(), x.get(), k.get(), m.get());
    return r.to_u64();
}

inline int jacobi(std::int64_t a, std::uint64_t n) {
    Mpz m(n), x;
    mpz_set_si(x.get(), a);
    return mpz_jacobi(x.get(), m.get());
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

/// Legendre symbol by enumerating the squares mod a small prime p.
inline int legendre_by_enumeration(std::int64_t a, std::int64_t p) {
    std::int64_t const r = mod(a, p);
    if (r == 0) return 0;
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == r) return 1;
    }
    return -1;
}

/// U_0..U_k of U_j = P U_{j-1} - Q U_{j-2} (U_0 = u0, U_1 = u1) mod n.
inline std::vector<std::uint64_t> recurrence(std::int64_t P, std::int64_t Q, std::int64_t u0,
                                             std::int64_t u1, std::uint64_t k, std::uint64_t n) {
    auto const m = static_cast<__int128>(n);
    auto reduce = [m](__int128 v) { v %= m; return v < 0 ? v + m : v; };
    std::vector<std::uint64_t> out{static_cast<std::uint64_t>(reduce(u0)),
                                   static_cast<std::uint64_t>(reduce(u1))};
    __int128 const p = reduce(P);
    __int128 const q = reduce(Q);
    while (out.size() <= k) {
        std::size_t const j = out.size();
        out.push_back(static_cast<std::uint64_t>(reduce(p * out[j - 1] - q * out[j - 2])));
    }
    out.resize(k + 1);
    return out;
}

inline bool is_prime_by_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
    std::vector<bool> composite(limit, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

/// Random odd modulus in [lo, hi].
inline std::uint64_t random_odd(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    std::uint64_t n = dist(rng) | 1;
    return n > hi ? n - 2 : n;
}

}  // namespace oracle
