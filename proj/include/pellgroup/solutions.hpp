#ifndef PELLGROUP_SOLUTIONS_HPP
#define PELLGROUP_SOLUTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellgroup/gdgroup.hpp"
#include "pellgroup/integer.hpp"

namespace pellgroup {

/// Whether the counting theory covers D: -D = 2 or 3 mod 4, D square-free,
/// D > 1 and every class of C(-4D) of order at most 2.
struct Applicability
{
    Integer D;
    bool residue_ok = false;
    bool square_free = false;
    bool free_z2 = false;
    std::size_t class_number = 0;

    bool applicable() const { return D > 1 && residue_ok && square_free && free_z2; }

    /// Empty when applicable, otherwise why not.
    std::string reason() const;

    /// Throws the NotApplicable subclass matching reason().
    void require() const;
};

Applicability check_applicability(Integer const & D);

/// Whether some normalized solution has hypotenuse c. Throws NotApplicable
/// when D is outside the theory.
bool solution_exists(Integer const & D, Integer const & c);

/// The elementary solution zeta_p = (x0 + y0 sqrt(-D)) / p.
struct ZetaFactor
{
    Integer D;
    Integer p;
    Integer x0;
    Integer y0;

    GroupElement element() const;
};

ZetaFactor zeta(Integer const & D, Integer const & p);

/// If (x + y sqrt(-D)) divides (a + b sqrt(-D)) in Z[sqrt(-D)], the quotient.
std::optional<std::pair<Integer, Integer>>
divides(Integer const & x, Integer const & y, Integer const & a,
        Integer const & b, Integer const & D);

struct FactorTerm
{
    Integer prime;
    /// Nonzero; negative for a power of the conjugate.
    long exponent = 0;

    bool operator==(FactorTerm const &) const = default;
};

/// z = sign * prod zeta_p^exponent, primes strictly increasing.
struct Factorization
{
    int sign = 1;
    std::vector<FactorTerm> terms;

    bool operator==(Factorization const &) const = default;
};

Factorization factor_element(GroupElement const & z);

/// Multiplies the factorization back out.
GroupElement recompose(Integer const & D, Factorization const & f);

/// All normalized solutions with hypotenuse c, sorted by b.
std::vector<NormalizedSolution> enumerate_solutions(Integer const & D, Integer const & c);

/// 2^(k-1) for c whose k distinct primes all lie in S, else 0.
Integer count_solutions(Integer const & D, Integer const & c);

/// Product of two solutions with coprime hypotenuses.
NormalizedSolution multiply_solutions(NormalizedSolution const & s1,
                                      NormalizedSolution const & s2);

} // namespace pellgroup

#endif
