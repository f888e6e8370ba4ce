#include "pellgroup/integer.hpp"

#include <cctype>

namespace pellgroup {

std::optional<Integer> parse_integer(std::string const & text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            return std::nullopt;
    std::string digits = text[0] == '+' ? text.substr(1) : text;
    Integer n;
    if (n.set_str(digits, 10) != 0)
        return std::nullopt;
    return n;
}

std::optional<Integer> exact_sqrt(Integer const & n)
{
    if (n < 0)
        return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n)
        return std::nullopt;
    return r;
}

} // namespace pellgroup
