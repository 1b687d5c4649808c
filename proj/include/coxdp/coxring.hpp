#ifndef COXDP_COXRING_HPP
#define COXDP_COXRING_HPP

#include <cstdint>
#include <vector>

#include "coxdp/matrix.hpp"
#include "coxdp/multipoly.hpp"
#include "coxdp/nagata.hpp"
#include "coxdp/picard.hpp"

namespace coxdp {

// Classes of degree 1 carrying Cox generators: the exceptional classes,
// plus -K at r = 8 (whose section space is 2-dimensional). Sorted.
std::vector<PicClass> degree_one_classes(const DelPezzoLattice& lat);

// All effective classes of degree n, as the n-fold sumset of the
// degree-1 generator classes, deduplicated and sorted. n = 0 gives the
// zero class alone.
std::vector<PicClass> effective_classes_of_degree(const DelPezzoLattice& lat, int n);

// dim Cox_n = sum of h0 over the effective classes of degree n.
std::int64_t cox_dimension(const DelPezzoLattice& lat, int n);

struct DegreeEntry {
    std::vector<PicClass> classes;
    std::int64_t dimension = 0;
};

// entries[n] lists the effective classes of degree n with dim Cox_n,
// for n = 0..max_degree.
struct GradedDimensionTable {
    int r = 0;
    std::vector<DegreeEntry> entries;
};

GradedDimensionTable build_dimension_table(const DelPezzoLattice& lat, int max_degree);

// Hilbert numerator data: series times (1-t)^{r+3}, truncated at the
// expected degree 2r-6 after a verified zero guard coefficient.
struct HilbertData {
    int r = 0;
    int krull_dim = 0; // r + 3
    std::vector<std::int64_t> numerator;
    int a_invariant = 0; // degree(numerator) - (r + 3)
};

// Computes dims through degree 2r-6+1 and extracts the numerator. The
// guard coefficient beyond 2r-6 must vanish. r = 7 sits behind the flag
// (minutes of sumset work); r = 8 is rejected outright.
HilbertData hilbert_numerator(const DelPezzoLattice& lat, bool allow_r7 = false);

bool gorenstein_palindrome_check(const HilbertData& h);

// True iff the numerator degree s satisfies s - (r+3) = r - 9.
bool a_invariant_check(const HilbertData& h);

// Number of degree-1 generators: equals cox_dimension(r, 1).
std::int64_t generator_count(const DelPezzoLattice& lat);

// dim Sym^2(Cox_1) minus the rank of the span of pairwise products of
// the degree-1 section bases in the invariant-ring model. Guarded to
// r <= 5 unless allow_large is set.
std::int64_t quadratic_relation_count(const PointConfiguration& points,
                                      bool allow_large = false);

// Blow-down chart identity at the exceptional class e: with the Weyl
// word g taking l_r to e and P = g(D2 extended by a zero coefficient),
// checks h0_{r-1}(D2) = h0_r(P) and h0_r(P + k*e) = h0_r(P) for
// k = 1..max_k. sublat must be the rank r-1 lattice.
bool chart_check(const DelPezzoLattice& lat, const DelPezzoLattice& sublat,
                 const PicClass& e, const PicClass& d2, int max_k = 3);

struct GapProbeResult {
    std::int64_t subring_dim = 0; // span of exceptional-section products
    std::int64_t full_dim = 0;    // interpolation dimension of the component
};

// r = 8 experiment: dimension of the class-D slice of the subring
// generated by the 240 exceptional sections (products over all multisets
// of exceptional classes summing to D) against the full component
// dimension. degree(D) may not exceed max_factor_degree.
GapProbeResult gap_probe(const PointConfiguration& points, const PicClass& d,
                         int max_factor_degree);

// Rank of the Jacobian matrix (d p_i / d v_j) evaluated at the point.
std::int64_t jacobian_rank_at(const std::vector<MultiPoly>& polys,
                              const std::vector<Rational>& point);

} // namespace coxdp

#endif
