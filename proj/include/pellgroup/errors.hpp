#ifndef PELLGROUP_ERRORS_HPP
#define PELLGROUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pellgroup {

/* Every failure the library reports on mathematically inadmissible input
 * derives from DomainError. Internal invariant violations (which would mean a
 * bug, or a counterexample to a theorem) are std::logic_error instead. */
class DomainError : public std::runtime_error
{
    public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public DomainError
{
    public:
    using DomainError::DomainError;
};

/// Raised when a quadratic residue was required and the input is not one.
class NoSquareRoot : public DomainError
{
    public:
    using DomainError::DomainError;
};

/// (a, b, c) does not satisfy a^2 + D b^2 = c^2.
class NotOnEllipse : public DomainError
{
    public:
    using DomainError::DomainError;
};

/// The sign/conjugation orbit of the element has fewer than four points.
class DegenerateOrbit : public DomainError
{
    public:
    using DomainError::DomainError;
};

/// The element has no positive representative (units, b = 0, or D = 1).
class NoNormalizedForm : public DomainError
{
    public:
    using DomainError::DomainError;
};

/// D is outside the range where the counting theory holds.
class NotApplicable : public DomainError
{
    public:
    using DomainError::DomainError;
};

/// -D is 1 mod 4, so even hypotenuses occur and the theory does not cover them.
class UnsupportedResidueClass : public NotApplicable
{
    public:
    using NotApplicable::NotApplicable;
};

/// The class group C(-4D) has an element of order greater than 2.
class UnsupportedClassGroup : public NotApplicable
{
    public:
    using NotApplicable::NotApplicable;
};

/// The prime is not of the form x0^2 + D y0^2 = p^2 with x0, y0 > 0 coprime.
class NotRepresentable : public DomainError
{
    public:
    using DomainError::DomainError;
};

/// The hypotenuse has a prime factor outside the generating set.
class NotFactorable : public DomainError
{
    public:
    using DomainError::DomainError;
};

} // namespace pellgroup

#endif
