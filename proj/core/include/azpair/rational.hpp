#ifndef AZPAIR_RATIONAL_HPP
#define AZPAIR_RATIONAL_HPP

/// Exact rational scalars, places of Q, p-adic valuations and support primes.
///
/// Rationals are GMP mpq_class values kept in canonical form: coprime
/// numerator/denominator, denominator positive, zero stored as 0/1.
/// Everything here is immutable after construction and safe to share
/// across threads.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace azpair {

using Integer = mpz_class;
using Rational = mpq_class;

/// A place of Q: the archimedean absolute value or a p-adic one.
/// For K = Q every local degree ratio r_v equals 1.
class Place {
public:
    enum class Kind { archimedean, finite };

    static Place archimedean() { return Place(Kind::archimedean, 0); }
    static Place finite(Integer p);  // throws std::domain_error unless p is prime

    Kind kind() const { return kind_; }
    bool is_archimedean() const { return kind_ == Kind::archimedean; }
    /// The residue characteristic; only meaningful for finite places.
    const Integer& prime() const { return prime_; }

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind_ == b.kind_ && a.prime_ == b.prime_;
    }
    /// Archimedean first, then primes ascending (the report merge order).
    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_) return a.kind_ == Kind::archimedean;
        return a.prime_ < b.prime_;
    }

private:
    Place(Kind k, Integer p) : kind_(k), prime_(std::move(p)) {}
    Kind kind_;
    Integer prime_;
};

std::string to_string(const Place& v);

/// Deterministic-for-practical-sizes primality test (GMP Miller-Rabin/BPSW).
bool is_prime(const Integer& n);

/// v_p(n) for a nonzero integer: the exponent of p in n.
long valuation(const Integer& n, const Integer& p);

/// v_p(q) for a nonzero rational, so |q|_p = p^(-v_p(q)).
/// Throws std::domain_error on q = 0 ("valuation of zero undefined")
/// or composite p.
long valuation(const Rational& q, const Integer& p);

/// log |q|_v for nonzero q: ln|q| at the archimedean place,
/// -v_p(q) ln p at a finite one. Exact up to double rounding; works for
/// rationals far beyond double range.
double log_abs(const Rational& q, const Place& v);

/// ln|q| as a double, safe for arbitrarily large numerators/denominators.
double log_value(const Rational& q);
double log_value(const Integer& n);

/// All primes dividing some numerator or denominator among `values`
/// (zeros are skipped), sorted ascending. Trial division up to
/// `trial_bound`, then a Brent-rho fallback so the postcondition holds
/// even for oversized factors.
std::vector<Integer> support_primes(const std::vector<Rational>& values,
                                    unsigned long trial_bound = 1'000'000);

/// Prime factorization of |n|, n != 0, as (prime, exponent) pairs sorted
/// by prime.
std::vector<std::pair<Integer, int>> factor(const Integer& n,
                                            unsigned long trial_bound = 1'000'000);

/// Parses "a/b" or "a" (optionally signed); serialization is the inverse.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace azpair

#endif
