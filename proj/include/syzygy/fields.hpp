#pragma once
/**
 * @file fields.hpp
 * @brief Coefficient fields: a prime field F_q and exact rationals.
 *
 * Field objects are small values carried inside a RingContext; every
 * arithmetic routine is templated on the field type and calls through the
 * context, so F_q and QQ share all the algebra above this layer.
 */

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "syzygy/errors.hpp"
#include "syzygy/rng.hpp"

namespace syzygy {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// F_q for an odd prime q < 2^31; elements are canonical residues in [0, q).
class PrimeField {
public:
    using Elem = std::int64_t;

    explicit PrimeField(std::int64_t q) : q_(q) {
        if (q <= 2 || q >= (std::int64_t(1) << 31) || !is_prime_u64(std::uint64_t(q)))
            throw invariant_error("coefficient modulus must be an odd prime < 2^31, got " + std::to_string(q));
    }

    std::int64_t modulus() const { return q_; }
    std::string name() const { return "F" + std::to_string(q_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool equal(Elem a, Elem b) const { return a == b; }

    Elem from_int(std::int64_t n) const {
        Elem r = n % q_;
        return r < 0 ? r + q_ : r;
    }
    Elem from_fraction(std::int64_t num, std::int64_t den) const {
        Elem d = from_int(den);
        if (d == 0) throw parse_error("coefficient denominator vanishes in " + name());
        return mul(from_int(num), inv(d));
    }

    Elem add(Elem a, Elem b) const { Elem r = a + b; return r >= q_ ? r - q_ : r; }
    Elem sub(Elem a, Elem b) const { Elem r = a - b; return r < 0 ? r + q_ : r; }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % q_; }

    Elem inv(Elem a) const {
        if (a == 0) throw invariant_error("inverse of zero in " + name());
        // extended Euclid on (a, q)
        std::int64_t t = 0, nt = 1, r = q_, nr = a;
        while (nr != 0) {
            std::int64_t qt = r / nr;
            std::int64_t tmp = t - qt * nt; t = nt; nt = tmp;
            tmp = r - qt * nr; r = nr; nr = tmp;
        }
        return t < 0 ? t + q_ : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string str(Elem a) const { return std::to_string(a); }

    Elem random(Rng& rng) const { return Elem(rng.below(std::uint64_t(q_))); }
    Elem random_nonzero(Rng& rng) const { return Elem(1 + rng.below(std::uint64_t(q_ - 1))); }

    /// Genericity arguments need room; tiny fields hit bad loci too often.
    bool large_enough_for_generic() const { return q_ > 1000; }

private:
    std::int64_t q_;
};

/// Exact rational numbers on gmp.
class Rationals {
public:
    using Elem = mpq_class;

    std::string name() const { return "QQ"; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem from_int(std::int64_t n) const { return Elem(static_cast<long>(n)); }
    Elem from_fraction(std::int64_t num, std::int64_t den) const {
        if (den == 0) throw parse_error("coefficient denominator vanishes in QQ");
        Elem r(static_cast<long>(num), static_cast<long>(den));
        r.canonicalize();
        return r;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw invariant_error("inverse of zero in QQ");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    std::string str(const Elem& a) const { return a.get_str(); }

    /// Small integers; plenty generic for coordinate changes in audit mode.
    Elem random(Rng& rng) const { return Elem(static_cast<long>(rng.below(32003))); }
    Elem random_nonzero(Rng& rng) const { return Elem(static_cast<long>(1 + rng.below(32002))); }

    bool large_enough_for_generic() const { return true; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw invariant_error("division by zero in QQ");
        return b;
    }
};

} // namespace syzygy
