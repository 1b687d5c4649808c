#ifndef COXDP_PICARD_HPP
#define COXDP_PICARD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxdp/errors.hpp"

namespace coxdp {

inline constexpr int kMinRank = 3;
inline constexpr int kMaxRank = 8;

// Divisor class a_0*l_0 + a_1*l_1 + ... + a_r*l_r on the blow-up of r
// points, 3 <= r <= 8, in the basis l_0 (line), l_1..l_r (exceptional
// divisors of the blown-up points). The intersection form has signature
// (1, -1, ..., -1). Value type, ordered lexicographically on (a_0..a_r).
class PicClass {
public:
    PicClass() : r_(kMinRank) { coeff_.fill(0); }
    explicit PicClass(int r);
    PicClass(int r, std::initializer_list<std::int64_t> coeffs);

    int r() const { return r_; }
    int size() const { return r_ + 1; }

    std::int64_t operator[](int i) const { return coeff_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return coeff_[static_cast<std::size_t>(i)]; }

    // Basis class l_i, 0 <= i <= r.
    static PicClass basis(int r, int i);

    bool is_zero() const;

    PicClass& operator+=(const PicClass& o);
    PicClass& operator-=(const PicClass& o);
    friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
    friend PicClass operator-(PicClass a, const PicClass& b) { return a -= b; }
    PicClass operator-() const;
    friend PicClass operator*(std::int64_t k, PicClass a);

    friend bool operator==(const PicClass& a, const PicClass& b);
    friend std::strong_ordering operator<=>(const PicClass& a, const PicClass& b);

    // Wire form "a_0,a_1,...,a_r".
    std::string to_string() const;
    static PicClass parse(std::string_view s);

private:
    void check_same_context(const PicClass& o) const;

    int r_;
    std::array<std::int64_t, kMaxRank + 1> coeff_;
};

struct PicClassHash {
    std::size_t operator()(const PicClass& c) const noexcept;
};

// Intersection pairing a_0*b_0 - sum_{i>=1} a_i*b_i; symmetric bilinear.
// Mismatched ranks raise input_error.
std::int64_t pairing(const PicClass& a, const PicClass& b);

// Degree of a class: pairing with -K.
std::int64_t degree(const PicClass& d);

// Reflection in a (-2)-class: D + (D,root)*root. Involution, preserves
// the pairing, fixes K. Roots with (root,root) != -2 are rejected.
PicClass reflect(const PicClass& d, const PicClass& root);

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

// Context for a fixed rank r: canonical class, simple roots, and the
// exceptional-curve set, enumerated once at construction.
class DelPezzoLattice {
public:
    explicit DelPezzoLattice(int r);

    int r() const { return r_; }
    PicClass zero() const { return PicClass(r_); }
    PicClass canonical() const { return k_; }          // K = -3l_0 + l_1 + ... + l_r
    PicClass anticanonical() const { return -k_; }

    // l_i - l_{i+1} for 1 <= i <= r-1 plus l_0 - l_1 - l_2 - l_3; all of
    // self-intersection -2. Their reflections generate the Weyl group.
    const std::vector<PicClass>& simple_roots() const { return simple_roots_; }

    // All classes with (E,E) = -1 and (E,-K) = 1, sorted. Sizes are
    // 6, 10, 16, 27, 56, 240 for r = 3..8.
    const std::vector<PicClass>& exceptional_curves() const { return exceptional_; }

    bool is_exceptional(const PicClass& e) const;

    // Orbit of seed under the simple-root reflections: breadth-first with
    // deduplication, returned sorted. Exceeding cap raises resource_error.
    std::vector<PicClass> weyl_orbit(const PicClass& seed,
                                     std::size_t cap = kDefaultOrbitCap) const;

    // Reflection word [r_1, ..., r_k] with
    // reflect(...reflect(from, r_1)..., r_k) == to, or nullopt when `to`
    // is outside the orbit of `from` (searched under the same cap).
    std::optional<std::vector<PicClass>> weyl_word(const PicClass& from, const PicClass& to,
                                                   std::size_t cap = kDefaultOrbitCap) const;

    // Nonnegative against every exceptional class.
    bool is_nef(const PicClass& d) const;

    // Dimension of the section space of d. Zero class -> 1; negative
    // degree -> 0; otherwise (-1)-classes pairing negatively are split
    // off one at a time (each step preserves the dimension and lowers
    // the degree by one) until the class is nef, where
    // ((D,D) + (D,-K))/2 + 1 applies.
    std::int64_t h0(const PicClass& d) const;

    bool is_effective(const PicClass& d) const { return h0(d) > 0; }

private:
    int r_;
    PicClass k_;
    std::vector<PicClass> simple_roots_;
    std::vector<PicClass> exceptional_;
};

// Complete list of solutions of (E,E) = -1, (E,-K) = 1 by exhaustive
// search over the proven box a_0 in [0,7], |a_i| <= 7 (Cauchy-Schwarz on
// the two defining equations bounds a_0 <= 7 and |a_i| <= sqrt(a_0^2+1)).
// Sorted ascending.
std::vector<PicClass> exceptional_curves_bruteforce(int r);

} // namespace coxdp

#endif
