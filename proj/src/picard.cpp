#include "coxdp/picard.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace coxdp {

namespace {

void check_rank(int r)
{
    if (r < kMinRank || r > kMaxRank)
        throw input_error("rank r must be in [3,8], got " + std::to_string(r));
}

} // namespace

PicClass::PicClass(int r) : r_(r)
{
    check_rank(r);
    coeff_.fill(0);
}

PicClass::PicClass(int r, std::initializer_list<std::int64_t> coeffs) : PicClass(r)
{
    if (static_cast<int>(coeffs.size()) != r + 1)
        throw input_error("class needs r+1 coefficients");
    std::copy(coeffs.begin(), coeffs.end(), coeff_.begin());
}

PicClass PicClass::basis(int r, int i)
{
    PicClass c(r);
    if (i < 0 || i > r)
        throw input_error("basis index out of range");
    c.coeff_[static_cast<std::size_t>(i)] = 1;
    return c;
}

bool PicClass::is_zero() const
{
    return std::all_of(coeff_.begin(), coeff_.begin() + size(), [](std::int64_t v) { return v == 0; });
}

void PicClass::check_same_context(const PicClass& o) const
{
    if (r_ != o.r_)
        throw input_error("classes from different lattice contexts (r=" + std::to_string(r_) +
                          " vs r=" + std::to_string(o.r_) + ")");
}

PicClass& PicClass::operator+=(const PicClass& o)
{
    check_same_context(o);
    for (int i = 0; i <= r_; ++i)
        coeff_[static_cast<std::size_t>(i)] += o.coeff_[static_cast<std::size_t>(i)];
    return *this;
}

PicClass& PicClass::operator-=(const PicClass& o)
{
    check_same_context(o);
    for (int i = 0; i <= r_; ++i)
        coeff_[static_cast<std::size_t>(i)] -= o.coeff_[static_cast<std::size_t>(i)];
    return *this;
}

PicClass PicClass::operator-() const
{
    PicClass c(r_);
    for (int i = 0; i <= r_; ++i)
        c.coeff_[static_cast<std::size_t>(i)] = -coeff_[static_cast<std::size_t>(i)];
    return c;
}

PicClass operator*(std::int64_t k, PicClass a)
{
    for (int i = 0; i <= a.r_; ++i)
        a.coeff_[static_cast<std::size_t>(i)] *= k;
    return a;
}

bool operator==(const PicClass& a, const PicClass& b)
{
    if (a.r_ != b.r_)
        return false;
    return std::equal(a.coeff_.begin(), a.coeff_.begin() + a.size(), b.coeff_.begin());
}

std::strong_ordering operator<=>(const PicClass& a, const PicClass& b)
{
    if (a.r_ != b.r_)
        return a.r_ <=> b.r_;
    for (int i = 0; i <= a.r_; ++i) {
        if (auto c = a.coeff_[static_cast<std::size_t>(i)] <=> b.coeff_[static_cast<std::size_t>(i)];
            c != std::strong_ordering::equal)
            return c;
    }
    return std::strong_ordering::equal;
}

std::string PicClass::to_string() const
{
    std::string s;
    for (int i = 0; i <= r_; ++i) {
        if (i)
            s += ',';
        s += std::to_string(coeff_[static_cast<std::size_t>(i)]);
    }
    return s;
}

PicClass PicClass::parse(std::string_view s)
{
    std::vector<std::int64_t> vals;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw input_error("malformed class coefficient: '" + std::string(tok) + "'");
        if (v > 1'000'000'000 || v < -1'000'000'000)
            throw input_error("class coefficient out of supported range");
        vals.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    int r = static_cast<int>(vals.size()) - 1;
    check_rank(r);
    PicClass c(r);
    for (int i = 0; i <= r; ++i)
        c[i] = vals[static_cast<std::size_t>(i)];
    return c;
}

std::size_t PicClassHash::operator()(const PicClass& c) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(c.r()));
    for (int i = 0; i <= c.r(); ++i)
        mix(static_cast<std::uint64_t>(c[i]));
    return h;
}

std::int64_t pairing(const PicClass& a, const PicClass& b)
{
    if (a.r() != b.r())
        throw input_error("pairing across different lattice contexts");
    std::int64_t s = a[0] * b[0];
    for (int i = 1; i <= a.r(); ++i)
        s -= a[i] * b[i];
    return s;
}

std::int64_t degree(const PicClass& d)
{
    // (D,-K) with -K = 3l_0 - l_1 - ... - l_r.
    std::int64_t s = 3 * d[0];
    for (int i = 1; i <= d.r(); ++i)
        s += d[i];
    return s;
}

PicClass reflect(const PicClass& d, const PicClass& root)
{
    if (pairing(root, root) != -2)
        throw input_error("reflection root must have self-intersection -2");
    return d + pairing(d, root) * root;
}

namespace {

// All (a_1..a_r) with sum = s, sum of squares = q, |a_i| <= 7, appended
// to out with the fixed prefix. Ascending choice per slot keeps the
// output lexicographically sorted.
void enumerate_tail(int r, int idx, std::int64_t s, std::int64_t q, PicClass& work,
                    std::vector<PicClass>& out)
{
    if (idx > r) {
        if (s == 0 && q == 0)
            out.push_back(work);
        return;
    }
    int remaining = r - idx + 1;
    // Cauchy-Schwarz: achievable linear sums are bounded by sqrt(n*q).
    if (static_cast<double>(s) * s > static_cast<double>(remaining) * q)
        return;
    for (std::int64_t a = -7; a <= 7; ++a) {
        if (a * a > q)
            continue;
        work[idx] = a;
        enumerate_tail(r, idx + 1, s - a, q - a * a, work, out);
    }
    work[idx] = 0;
}

} // namespace

std::vector<PicClass> exceptional_curves_bruteforce(int r)
{
    check_rank(r);
    std::vector<PicClass> out;
    PicClass work(r);
    for (std::int64_t a0 = 0; a0 <= 7; ++a0) {
        work[0] = a0;
        // (E,E) = -1 and (E,-K) = 1 pin the tail sums.
        enumerate_tail(r, 1, 1 - 3 * a0, a0 * a0 + 1, work, out);
    }
    return out;
}

DelPezzoLattice::DelPezzoLattice(int r) : r_(r), k_(PicClass(r))
{
    check_rank(r);
    k_[0] = -3;
    for (int i = 1; i <= r; ++i)
        k_[i] = 1;

    for (int i = 1; i <= r - 1; ++i)
        simple_roots_.push_back(PicClass::basis(r, i) - PicClass::basis(r, i + 1));
    PicClass alpha = PicClass::basis(r, 0);
    for (int i = 1; i <= 3; ++i)
        alpha -= PicClass::basis(r, i);
    simple_roots_.push_back(alpha);

    exceptional_ = exceptional_curves_bruteforce(r);
}

bool DelPezzoLattice::is_exceptional(const PicClass& e) const
{
    if (e.r() != r_)
        return false;
    return std::binary_search(exceptional_.begin(), exceptional_.end(), e);
}

std::vector<PicClass> DelPezzoLattice::weyl_orbit(const PicClass& seed, std::size_t cap) const
{
    if (seed.r() != r_)
        throw input_error("orbit seed from a different lattice context");
    std::set<PicClass> seen{seed};
    std::deque<PicClass> queue{seed};
    while (!queue.empty()) {
        PicClass cur = queue.front();
        queue.pop_front();
        for (const PicClass& root : simple_roots_) {
            PicClass next = reflect(cur, root);
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw resource_error("Weyl orbit exceeded cap of " + std::to_string(cap));
                queue.push_back(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<std::vector<PicClass>> DelPezzoLattice::weyl_word(const PicClass& from,
                                                                const PicClass& to,
                                                                std::size_t cap) const
{
    if (from.r() != r_ || to.r() != r_)
        throw input_error("Weyl word endpoints from a different lattice context");
    if (from == to)
        return std::vector<PicClass>{};
    // BFS with parent tracking; parent.second is the simple-root index used.
    std::map<PicClass, std::pair<PicClass, std::size_t>> parent;
    std::deque<PicClass> queue{from};
    parent.emplace(from, std::make_pair(from, simple_roots_.size()));
    while (!queue.empty()) {
        PicClass cur = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < simple_roots_.size(); ++g) {
            PicClass next = reflect(cur, simple_roots_[g]);
            if (parent.emplace(next, std::make_pair(cur, g)).second) {
                if (parent.size() > cap)
                    throw resource_error("Weyl orbit exceeded cap of " + std::to_string(cap));
                if (next == to) {
                    std::vector<PicClass> word;
                    PicClass at = to;
                    while (!(at == from)) {
                        auto& [prev, gen] = parent.at(at);
                        word.push_back(simple_roots_[gen]);
                        at = prev;
                    }
                    std::reverse(word.begin(), word.end());
                    return word;
                }
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

bool DelPezzoLattice::is_nef(const PicClass& d) const
{
    if (d.r() != r_)
        throw input_error("class from a different lattice context");
    return std::all_of(exceptional_.begin(), exceptional_.end(),
                       [&](const PicClass& e) { return pairing(d, e) >= 0; });
}

std::int64_t DelPezzoLattice::h0(const PicClass& d) const
{
    if (d.r() != r_)
        throw input_error("class from a different lattice context");
    PicClass cur = d;
    while (true) {
        if (cur.is_zero())
            return 1;
        if (degree(cur) < 0)
            return 0;
        // Most negative pairing, then lexicographically smallest class;
        // the list is sorted, so the first minimizer wins.
        std::int64_t worst = 0;
        const PicClass* worst_e = nullptr;
        for (const PicClass& e : exceptional_) {
            std::int64_t p = pairing(cur, e);
            if (p < worst) {
                worst = p;
                worst_e = &e;
            }
        }
        if (worst_e == nullptr) {
            // Nef: sections counted by ((D,D) + (D,-K))/2 + 1.
            std::int64_t chi_part = pairing(cur, cur) + degree(cur);
            if (chi_part % 2 != 0)
                throw internal_error("parity violation in nef section count");
            return chi_part / 2 + 1;
        }
        cur -= *worst_e;
    }
}

} // namespace coxdp
