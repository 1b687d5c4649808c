#include "coxdp/multipoly.hpp"

#include <algorithm>

#include "coxdp/errors.hpp"

namespace coxdp {

MultiPoly MultiPoly::constant(int nvars, const Rational& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponents e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars)
        throw input_error("exponent vector length mismatch");
    MultiPoly p(nvars);
    p.add_term(std::move(e), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int v)
{
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (nvars_ != o.nvars_)
        throw input_error("polynomial variable-count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    if (nvars_ != o.nvars_)
        throw input_error("polynomial variable-count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw input_error("polynomial variable-count mismatch");
    MultiPoly out(a.nvars_);
    MultiPoly::Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, cf] : terms_)
        cf *= c;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0)
        throw input_error("negative polynomial power");
    MultiPoly acc = constant(nvars_, Rational(1));
    for (int i = 0; i < e; ++i)
        acc *= *this;
    return acc;
}

MultiPoly MultiPoly::extended(int new_nvars) const
{
    if (new_nvars < nvars_)
        throw input_error("cannot shrink variable set");
    MultiPoly out(new_nvars);
    Exponents e(static_cast<std::size_t>(new_nvars), 0);
    for (const auto& [old_e, c] : terms_) {
        std::copy(old_e.begin(), old_e.end(), e.begin());
        out.terms_.emplace(e, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(int v, const MultiPoly& replacement) const
{
    if (replacement.nvars_ != nvars_)
        throw input_error("replacement variable-count mismatch");
    std::vector<MultiPoly> powers{constant(nvars_, Rational(1))};
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(v)];
        while (static_cast<int>(powers.size()) <= k)
            powers.push_back(powers.back() * replacement);
        Exponents rest = e;
        rest[static_cast<std::size_t>(v)] = 0;
        Exponents me(static_cast<std::size_t>(nvars_));
        for (const auto& [pe, pc] : powers[static_cast<std::size_t>(k)].terms_) {
            for (std::size_t i = 0; i < me.size(); ++i)
                me[i] = pe[i] + rest[i];
            out.add_term(me, pc * c);
        }
    }
    return out;
}

MultiPoly MultiPoly::shifted(int v, int e) const
{
    MultiPoly out(nvars_);
    for (const auto& [ex, c] : terms_) {
        Exponents ne = ex;
        ne[static_cast<std::size_t>(v)] += e;
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::divided_exact(int v, int e) const
{
    MultiPoly out(nvars_);
    for (const auto& [ex, c] : terms_) {
        if (ex[static_cast<std::size_t>(v)] < e)
            throw internal_error("inexact division by variable power");
        Exponents ne = ex;
        ne[static_cast<std::size_t>(v)] -= e;
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::derivative(int v) const
{
    MultiPoly out(nvars_);
    for (const auto& [ex, c] : terms_) {
        int k = ex[static_cast<std::size_t>(v)];
        if (k == 0)
            continue;
        Exponents ne = ex;
        ne[static_cast<std::size_t>(v)] = k - 1;
        out.add_term(ne, c * k);
    }
    return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw input_error("evaluation point length mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k)
                term *= point[i];
        }
        total += term;
    }
    return total;
}

std::int64_t MultiPoly::degree_in(const std::vector<int>& vars) const
{
    std::int64_t best = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        std::int64_t d = 0;
        for (int v : vars)
            d += e[static_cast<std::size_t>(v)];
        best = std::max(best, d);
    }
    return best;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names.at(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (!first)
            s += c >= 0 ? " + " : " - ";
        else if (c < 0)
            s += "-";
        first = false;
        Rational a = abs(c);
        std::string cs = coxdp::to_string(a);
        if (mono.empty())
            s += cs;
        else if (a == 1)
            s += mono;
        else
            s += cs + "*" + mono;
    }
    return s;
}

} // namespace coxdp
