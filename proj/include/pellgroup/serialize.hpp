#ifndef PELLGROUP_SERIALIZE_HPP
#define PELLGROUP_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "pellgroup/gdgroup.hpp"
#include "pellgroup/oracle.hpp"
#include "pellgroup/quadform.hpp"
#include "pellgroup/solutions.hpp"

namespace pellgroup {

using json = nlohmann::json;

/* JSON schemas:
 *   descriptor    {"K", "class_number", "forms": [[a,b,c]...], "orders": [...], "free_z2"}
 *   element       {"D", "a", "b", "c"}
 *   solution set  {"D", "c", "count", "solutions": [{"a","b","c",
 *                  "factorization": {"sign", "terms": [[p,e]...]}}...]}
 * Integers beyond the signed 64-bit range are written as decimal strings. */

json integer_to_json(Integer const & n);
Integer integer_from_json(json const & j);

json to_json(ClassGroupDescriptor const & d);
ClassGroupDescriptor descriptor_from_json(json const & j);

json to_json(GroupElement const & z);
GroupElement element_from_json(json const & j);

json to_json(Factorization const & f);
Factorization factorization_from_json(json const & j);

struct SolutionEntry
{
    NormalizedSolution solution;
    Factorization factorization;
};

struct SolutionSet
{
    Integer D;
    Integer c;
    Integer count;
    std::vector<SolutionEntry> solutions;
};

/// Enumerates the solutions with hypotenuse c and factors each one.
SolutionSet solve(Integer const & D, Integer const & c);

json to_json(SolutionSet const & s);
SolutionSet solution_set_from_json(json const & j);

/// Header "D,c,k,theory_count,oracle_count,agree" then one line per row.
std::string sweep_to_csv(SweepSummary const & s);

} // namespace pellgroup

#endif
