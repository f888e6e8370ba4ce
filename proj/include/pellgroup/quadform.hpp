#ifndef PELLGROUP_QUADFORM_HPP
#define PELLGROUP_QUADFORM_HPP

#include <iosfwd>
#include <vector>

#include "pellgroup/integer.hpp"

namespace pellgroup {

/// The binary quadratic form a x^2 + b xy + c y^2, written [a, b, c].
struct QuadForm
{
    Integer a;
    Integer b;
    Integer c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    bool is_primitive() const;

    /// Value of the form at (x, y).
    Integer operator()(Integer const & x, Integer const & y) const
    {
        return a * x * x + b * x * y + c * y * y;
    }

    bool operator==(QuadForm const & o) const
    {
        return a == o.a && b == o.b && c == o.c;
    }
};

/// Lexicographic on (a, b, c).
bool operator<(QuadForm const & f, QuadForm const & g);
std::ostream & operator<<(std::ostream & o, QuadForm const & f);

/// Validating constructor: rejects indefinite and imprimitive forms.
QuadForm make_form(Integer a, Integer b, Integer c);

/// [1, 0, -K/4] for K = 0 mod 4, [1, 1, (1-K)/4] for K = 1 mod 4.
QuadForm identity_form(Integer const & K);

/// Unique reduced representative of the class of f: |b| <= a <= c, and
/// b >= 0 whenever |b| = a or a = c.
QuadForm reduce(QuadForm const & f);

bool is_reduced(QuadForm const & f);

/// Reduced representative of the inverse class, [a, -b, c].
QuadForm inverse(QuadForm const & f);

/// Dirichlet composition of the classes of f and g, reduced.
QuadForm compose(QuadForm const & f, QuadForm const & g);

/// Smallest n >= 1 with f^n in the identity class.
unsigned long element_order(QuadForm const & f);

/// The class group C(K) described through its reduced forms.
struct ClassGroupDescriptor
{
    Integer K;
    /// Sorted lexicographically on (a, b, c).
    std::vector<QuadForm> reduced_forms;
    std::size_t class_number = 0;
    /// orders[i] is the order of reduced_forms[i].
    std::vector<unsigned long> orders;
    /// Every class has order at most 2.
    bool is_free_z2 = false;

    QuadForm identity() const { return identity_form(K); }
    unsigned long order_of(QuadForm const & f) const;
};

/// Enumerates reduced forms with a <= sqrt(|K|/3). K must be negative and
/// divisible by 4.
ClassGroupDescriptor enumerate_class_group(Integer const & K);

} // namespace pellgroup

#endif
