#ifndef PELLGROUP_ARITH_HPP
#define PELLGROUP_ARITH_HPP

#include <vector>

#include "pellgroup/integer.hpp"

namespace pellgroup {

struct PrimePower
{
    Integer prime;
    unsigned long exponent = 0;

    Integer value() const;

    bool operator==(PrimePower const &) const = default;
};

/// A positive integer together with its complete factorization, primes
/// strictly increasing.
struct FactoredInteger
{
    Integer value;
    std::vector<PrimePower> factors;

    Integer recompose() const;
    std::size_t distinct_primes() const { return factors.size(); }
};

/* Primality is exact below 3.3e24 (Miller-Rabin on the first thirteen prime
 * bases). Above that GMP's BPSW-based test is used; no BPSW pseudoprime is
 * known. */
bool is_prime(Integer const & n);

/// Legendre symbol (a/p) by Euler's criterion. Throws InvalidArgument when p
/// is not an odd prime.
int legendre(Integer const & a, Integer const & p);

/// Square root of a modulo the odd prime p, the smaller of the two roots.
/// Throws NoSquareRoot if a is not a nonzero quadratic residue.
Integer sqrt_mod_p(Integer const & a, Integer const & p);

/// Root s of s^2 + D = 0 (mod p^target_exponent), lifted one exponent at a
/// time from sqrt_mod_p(-D mod p, p). The result lies in [0, p^target_exponent)
/// and is congruent to the base root modulo p.
Integer hensel_lift(Integer const & D, Integer const & p,
                    unsigned long target_exponent);

/// Complete factorization: trial division by primes below 10^6, then
/// Pollard rho (Brent) on what is left.
FactoredInteger factorize(Integer const & n);

bool is_square_free(Integer const & n);

/// Modular inverse of a modulo m; throws InvalidArgument if none exists.
Integer inverse_mod(Integer const & a, Integer const & m);

} // namespace pellgroup

#endif
