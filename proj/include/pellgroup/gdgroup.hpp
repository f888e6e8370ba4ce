#ifndef PELLGROUP_GDGROUP_HPP
#define PELLGROUP_GDGROUP_HPP

#include <array>
#include <iosfwd>

#include "pellgroup/integer.hpp"

namespace pellgroup {

/// The point (a + b sqrt(-D)) / c of norm 1, stored in lowest terms with c > 0.
/// Every GroupElement satisfies a^2 + D b^2 = c^2 and gcd(a, b, c) = 1.
class GroupElement
{
    public:
    Integer const & D() const { return D_; }
    Integer const & a() const { return a_; }
    Integer const & b() const { return b_; }
    Integer const & c() const { return c_; }

    bool is_unit() const { return c_ == 1; }
    bool is_identity() const { return c_ == 1 && a_ == 1; }

    bool operator==(GroupElement const & o) const
    {
        return D_ == o.D_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

    friend GroupElement make_element(Integer const & D, Integer a, Integer b, Integer c);
    friend GroupElement identity_element(Integer const & D);
    friend GroupElement multiply(GroupElement const & z1, GroupElement const & z2);
    friend GroupElement conjugate(GroupElement const & z);

    private:
    /* lowest terms and the norm identity, without revalidating D */
    static GroupElement checked(Integer const & D, Integer a, Integer b, Integer c);

    GroupElement(Integer D, Integer a, Integer b, Integer c)
        : D_(std::move(D)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {}

    Integer D_;
    Integer a_;
    Integer b_;
    Integer c_;
};

std::ostream & operator<<(std::ostream & o, GroupElement const & z);

/// A positive primitive triple a^2 + D b^2 = c^2.
struct NormalizedSolution
{
    Integer D;
    Integer a;
    Integer b;
    Integer c;

    bool operator==(NormalizedSolution const & o) const
    {
        return D == o.D && a == o.a && b == o.b && c == o.c;
    }
};

/// Orders by (D, c, b); solutions sharing D and c are listed by b ascending.
bool operator<(NormalizedSolution const & s, NormalizedSolution const & t);
std::ostream & operator<<(std::ostream & o, NormalizedSolution const & s);

/// Divides out gcd(a, b, c), forces c > 0 and checks a^2 + D b^2 = c^2.
/// Throws InvalidArgument for c = 0 or D not positive and square-free,
/// NotOnEllipse otherwise.
GroupElement make_element(Integer const & D, Integer a, Integer b, Integer c);

GroupElement identity_element(Integer const & D);

/// (x1 x2 - D y1 y2, x1 y2 + x2 y1) / (c1 c2), reduced.
GroupElement multiply(GroupElement const & z1, GroupElement const & z2);

GroupElement conjugate(GroupElement const & z);

/// z^n by square-and-multiply; negative powers go through the conjugate.
GroupElement pow(GroupElement const & z, long n);

/// {z, -z, conj(z), -conj(z)}. Throws DegenerateOrbit when any two coincide.
std::array<GroupElement, 4> gamma_orbit(GroupElement const & z);

/// (|a|, |b|, c). Throws NoNormalizedForm for units, b = 0, and D = 1
/// (where normalization also needs a < b).
NormalizedSolution to_normalized(GroupElement const & z);

/// The element (a + b sqrt(-D)) / c of a normalized solution.
GroupElement to_element(NormalizedSolution const & s);

} // namespace pellgroup

#endif
