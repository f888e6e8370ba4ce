#ifndef PELLGROUP_ORACLE_HPP
#define PELLGROUP_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pellgroup/gdgroup.hpp"
#include "pellgroup/integer.hpp"

namespace pellgroup {

/* Exhaustive ground truth. Nothing here touches class groups, zeta or the
 * factorization theory; it only scans the defining equation. */

/// Every (a, b, c) with a, b >= 1, a^2 + D b^2 = c^2 and gcd(a, b, c) = 1,
/// sorted by b.
std::vector<NormalizedSolution> brute_force_solutions(Integer const & D, Integer const & c);

enum class Agreement
{
    agree,
    disagree,
    theory_not_applicable,
};

std::string to_string(Agreement a);

struct OracleReport
{
    Integer D;
    Integer c;
    std::vector<NormalizedSolution> solutions;
    Agreement agreement = Agreement::theory_not_applicable;
    /// count_solutions, when the theory applies.
    std::optional<Integer> theory_count;
};

OracleReport cross_check(Integer const & D, Integer const & c);

struct SweepRow
{
    Integer c;
    /// Distinct prime factors of c.
    std::size_t k = 0;
    Integer theory_count;
    std::size_t oracle_count = 0;
    bool agree = false;
};

struct SweepSummary
{
    Integer D;
    Integer c_max;
    /// One row per odd c in [3, c_max], ascending.
    std::vector<SweepRow> rows;
    std::size_t agreements = 0;
    std::vector<Integer> disagreements;
};

/// cross_check for every odd c in [3, c_max], fanned out over up to
/// `threads` workers and merged in c order.
SweepSummary verify_sweep(Integer const & D, Integer const & c_max, unsigned threads = 1);

} // namespace pellgroup

#endif
