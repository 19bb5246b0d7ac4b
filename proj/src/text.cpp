#include "qvlab/text.hpp"

#include <cctype>

#include "qvlab/errors.hpp"

namespace qvlab {

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    if (strip(s).empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(strip(s.substr(start)));
            break;
        }
        out.push_back(strip(s.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

mpz_class parse_integer(std::string_view s)
{
    s = strip(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw parse_error("expected integer, got '" + std::string(s) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("expected integer, got '" + std::string(s) + "'");
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(buf, 10);
}

} // namespace qvlab
