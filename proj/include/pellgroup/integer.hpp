#ifndef PELLGROUP_INTEGER_HPP
#define PELLGROUP_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace pellgroup {

/// Arbitrary-precision integer used throughout the library.
using Integer = mpz_class;

inline std::string to_string(Integer const & n)
{
    return n.get_str(10);
}

/// Parses a base-10 integer with an optional leading sign. Returns nullopt on
/// any malformed input (empty, stray characters, embedded whitespace).
std::optional<Integer> parse_integer(std::string const & text);

/// Exact integer square root when n is a perfect square.
std::optional<Integer> exact_sqrt(Integer const & n);

inline Integer abs(Integer const & n)
{
    return n < 0 ? Integer(-n) : n;
}

inline Integer gcd(Integer const & a, Integer const & b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Integer mod(Integer const & a, Integer const & m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_int64(Integer const & n)
{
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 63;
}

inline std::int64_t to_int64(Integer const & n)
{
    /* mpz_get_si only reads one limb, which is 64 bits on the targets we build for */
    return static_cast<std::int64_t>(mpz_get_si(n.get_mpz_t()));
}

} // namespace pellgroup

#endif
