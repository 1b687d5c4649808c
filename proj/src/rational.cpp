#include "coxdp/rational.hpp"

#include <cctype>

namespace coxdp {

Rational parse_rational(std::string_view s)
{
    if (s.empty())
        throw input_error("empty rational literal");
    // mpq set_str accepts forms we do not ("0x..", whitespace); vet first.
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            ++slashes;
            continue;
        }
        if (c == '-') {
            bool at_start = (i == 0) || (s[i - 1] == '/');
            if (!at_start)
                throw input_error("malformed rational: " + std::string(s));
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw input_error("malformed rational: " + std::string(s));
    }
    if (slashes > 1 || s.front() == '/' || s.back() == '/')
        throw input_error("malformed rational: " + std::string(s));

    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw input_error("malformed rational: " + std::string(s));
    if (q.get_den() == 0)
        throw input_error("zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::size_t bit_length(const Integer& z)
{
    if (z == 0)
        return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

} // namespace coxdp
