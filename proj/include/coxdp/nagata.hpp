#ifndef COXDP_NAGATA_HPP
#define COXDP_NAGATA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxdp/matrix.hpp"
#include "coxdp/multipoly.hpp"
#include "coxdp/picard.hpp"
#include "coxdp/rational.hpp"

namespace coxdp {

// Homogeneous coordinates of r plane points P_j = (a_0j : a_1j : a_2j),
// held as exact rationals. `validated` records a passed general-position
// check; the section-space operations insist on it.
struct PointConfiguration {
    int r = 0;
    std::vector<std::array<Rational, 3>> points; // one entry per P_j
    bool validated = false;

    const Rational& coord(int i, int j) const
    {
        return points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
};

struct Violation {
    enum class Kind { collinear, conic, cubic_double_point };
    Kind kind;
    std::vector<int> witness; // 1-based point indices
    std::string message;
};

// General-position scan: every 3 points off a common line, every 6 off a
// common conic, and (r = 8) no cubic through all eight points singular at
// one of them. Returns the first violation in that order, or nullopt and
// sets cfg.validated. Zero columns or a bad point count raise input_error.
std::optional<Violation> validate_general_position(PointConfiguration& cfg);

// Variable layout of k[V]: x_j, y_j interleaved, j = 1..r.
inline int xvar(int j) { return 2 * (j - 1); }
inline int yvar(int j) { return 2 * (j - 1) + 1; }
inline int nagata_nvars(int r) { return 2 * r; }

std::vector<std::string> nagata_var_names(int r);

// The three invariant forms w_i = sum_j a_ij * x_j * prod_{k != j} y_k,
// each spanning its slice of the class-l_0 component.
std::array<MultiPoly, 3> w_forms(const PointConfiguration& cfg);

// Basis of the unipotent parameter space: solutions u of
// sum_j a_ij u_j = 0 for i = 0,1,2. Dimension r - 3 at validated points.
std::vector<std::vector<Rational>> u_constraint_basis(const PointConfiguration& cfg);

bool satisfies_u_constraints(const PointConfiguration& cfg, const std::vector<Rational>& u);

// Group action on k[V]: x_j -> x_j + u_j * y_j, y_j fixed, expanded
// exactly. u outside the constraint space raises input_error.
MultiPoly u_action(const MultiPoly& p, const std::vector<Rational>& u,
                   const PointConfiguration& cfg);

// Same substitution with a formal parameter t (new last variable):
// x_j -> x_j + t * u_j * y_j. Invariance checks compare the result with
// p extended by the t variable, as an exact polynomial identity.
MultiPoly u_action_formal(const MultiPoly& p, const std::vector<Rational>& u,
                          const PointConfiguration& cfg);

// Multidegree bookkeeping: for a monomial prod x_j^c_j y_j^e_j the class
// is d*l_0 - sum m_j l_j with d = sum c_j and m_j = d - c_j - e_j.
// Returns the common class of all terms, or nullopt if mixed/zero.
std::optional<PicClass> multidegree(int r, const MultiPoly& p);

// Dimension of plane curves of degree d = a_0 vanishing to order
// >= m_j = -a_j at P_j (orders <= 0 impose nothing): the number of degree-d
// monomials minus the rank of the stacked derivative-evaluation matrix,
// with each point handled in the affine chart of its largest coordinate.
// This is the section-space oracle independent of the lattice engine.
std::int64_t component_dimension(const PointConfiguration& cfg, const PicClass& d);

struct SectionSpace {
    PicClass cls;
    std::vector<MultiPoly> basis;                  // in k[V], U-invariant
    std::vector<std::vector<Rational>> plane_model; // F_d coefficient vectors
};

// Interpolation kernel -> F_d coefficients -> F_d(w_0,w_1,w_2), divided
// exactly by prod y_j^{m_j} (m_j > 0) and multiplied by y_j^{-m_j}
// (m_j < 0). Exact division failing means a broken invariant.
SectionSpace section_basis(const PointConfiguration& cfg, const PicClass& d);

// Rank of the span of one product per ordered choice of basis elements
// from each factor's section space, inside the target component.
// Factor classes must sum to target.
std::int64_t product_span_dim(const PointConfiguration& cfg,
                              const std::vector<PicClass>& factor_classes,
                              const PicClass& target);

// Rank of the coefficient matrix of the given polynomials over their
// joint monomial support.
std::int64_t span_rank(const std::vector<MultiPoly>& polys);

// Deterministic seeded configuration: standard points
// (1:0:0),(0:1:0),(0:0:1),(1:1:1) first when r >= 4 and standard_prefix
// is set, remaining coordinates uniform integers in [-20,20], resampled
// until validation passes (cap 1000 attempts).
PointConfiguration sample_points(int r, std::uint64_t seed, bool standard_prefix = true);

// Points-file JSON: {"r": int, "points": [["p","q","r"], ...]} with
// rationals rendered canonically ("p" or "p/q").
std::string points_to_json(const PointConfiguration& cfg);
PointConfiguration points_from_json(const std::string& text);
PointConfiguration read_points_file(const std::string& path);
void write_points_file(const std::string& path, const PointConfiguration& cfg);

} // namespace coxdp

#endif
