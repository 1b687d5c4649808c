#ifndef COXDP_MULTIPOLY_HPP
#define COXDP_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxdp/rational.hpp"

namespace coxdp {

// Sparse exact-rational polynomial in a fixed number of variables,
// indexed 0..nvars-1. Terms live in a map keyed by exponent vector, so
// iteration order (and every derived output) is deterministic.
class MultiPoly {
public:
    using Exponents = std::vector<std::int32_t>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly monomial(int nvars, Exponents e, const Rational& c);
    static MultiPoly variable(int nvars, int v);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }

    bool operator==(const MultiPoly& o) const = default;

    MultiPoly pow(int e) const;

    // Same polynomial viewed in a larger variable set (old indices keep
    // their meaning; new trailing variables get exponent 0).
    MultiPoly extended(int new_nvars) const;

    // Replaces variable v by the given polynomial (over the same nvars).
    MultiPoly substitute(int v, const MultiPoly& replacement) const;

    // Multiplies by var^e.
    MultiPoly shifted(int v, int e) const;

    // Divides every term by var^e; throws internal_error if any term has
    // a smaller exponent.
    MultiPoly divided_exact(int v, int e) const;

    MultiPoly derivative(int v) const;

    Rational eval(const std::vector<Rational>& point) const;

    // Total degree in the listed variables, or -1 for the zero polynomial.
    std::int64_t degree_in(const std::vector<int>& vars) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    TermMap terms_;
};

} // namespace coxdp

#endif
