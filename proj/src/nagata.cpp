#include "coxdp/nagata.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "coxdp/errors.hpp"

namespace coxdp {

namespace {

void check_config_shape(const PointConfiguration& cfg)
{
    if (cfg.r < kMinRank || cfg.r > kMaxRank)
        throw input_error("point configuration needs r in [3,8]");
    if (static_cast<int>(cfg.points.size()) != cfg.r)
        throw input_error("point configuration needs exactly r points");
    for (int j = 0; j < cfg.r; ++j) {
        if (cfg.coord(0, j) == 0 && cfg.coord(1, j) == 0 && cfg.coord(2, j) == 0)
            throw input_error("point " + std::to_string(j + 1) + " is the zero column");
    }
}

void require_validated(const PointConfiguration& cfg)
{
    check_config_shape(cfg);
    if (!cfg.validated)
        throw input_error("point configuration has not passed general-position validation");
}

Rational det3(const PointConfiguration& cfg, int a, int b, int c)
{
    auto m = [&](int i, int j) { return cfg.coord(i, j); };
    return m(0, a) * (m(1, b) * m(2, c) - m(1, c) * m(2, b)) -
           m(0, b) * (m(1, a) * m(2, c) - m(1, c) * m(2, a)) +
           m(0, c) * (m(1, a) * m(2, b) - m(1, b) * m(2, a));
}

// Degree-d monomials (e0,e1,e2), e0+e1+e2 = d, in a fixed scan order.
std::vector<std::array<int, 3>> ternary_monomials(int d)
{
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j)
            out.push_back({i, j, d - i - j});
    return out;
}

Rational rational_pow(const Rational& q, int e)
{
    Rational acc(1);
    for (int i = 0; i < e; ++i)
        acc *= q;
    return acc;
}

std::int64_t falling(int n, int k)
{
    std::int64_t acc = 1;
    for (int i = 0; i < k; ++i)
        acc *= n - i;
    return acc;
}

// Rows: all derivative conditions of order < m_j at P_j, in the affine
// chart of P_j's largest coordinate. Columns: degree-d monomials.
RationalMatrix interpolation_matrix(const PointConfiguration& cfg, const PicClass& d)
{
    const int deg = static_cast<int>(d[0]);
    auto monos = ternary_monomials(deg);

    std::size_t nrows = 0;
    for (int j = 1; j <= cfg.r; ++j) {
        std::int64_t m = -d[j];
        if (m > 0)
            nrows += static_cast<std::size_t>(m * (m + 1) / 2);
    }

    RationalMatrix mat(nrows, monos.size());
    std::size_t row = 0;
    for (int j = 1; j <= cfg.r; ++j) {
        int m = static_cast<int>(-d[j]);
        if (m <= 0)
            continue;
        int pj = j - 1;
        // Chart: largest |coordinate|, lowest index on ties.
        int chart = 0;
        for (int i = 1; i < 3; ++i)
            if (cmp(abs(cfg.coord(i, pj)), abs(cfg.coord(chart, pj))) > 0)
                chart = i;
        int su = (chart == 0) ? 1 : 0;
        int sv = (chart == 2) ? 1 : 2;
        Rational s0 = cfg.coord(su, pj) / cfg.coord(chart, pj);
        Rational t0 = cfg.coord(sv, pj) / cfg.coord(chart, pj);

        for (int alpha = 0; alpha < m; ++alpha) {
            for (int beta = 0; alpha + beta < m; ++beta) {
                for (std::size_t col = 0; col < monos.size(); ++col) {
                    int p = monos[col][static_cast<std::size_t>(su)];
                    int q = monos[col][static_cast<std::size_t>(sv)];
                    if (p < alpha || q < beta)
                        continue;
                    Rational v = Rational(falling(p, alpha)) * Rational(falling(q, beta)) *
                                 rational_pow(s0, p - alpha) * rational_pow(t0, q - beta);
                    mat.at(row, col) = v;
                }
                ++row;
            }
        }
    }
    return mat;
}

} // namespace

std::optional<Violation> validate_general_position(PointConfiguration& cfg)
{
    check_config_shape(cfg);
    cfg.validated = false;
    const int r = cfg.r;

    // Lines: all 3x3 minors of point triples. Coincident points fall out
    // here too (proportional columns kill the determinant).
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int c = b + 1; c < r; ++c)
                if (det3(cfg, a, b, c) == 0)
                    return Violation{Violation::Kind::collinear,
                                     {a + 1, b + 1, c + 1},
                                     "points " + std::to_string(a + 1) + "," +
                                         std::to_string(b + 1) + "," + std::to_string(c + 1) +
                                         " are collinear"};

    // Conics: each 6-subset evaluates the quadric monomials; a rank drop
    // means a conic through all six.
    if (r >= 6) {
        std::vector<int> idx(6);
        auto conic_singular = [&](const std::vector<int>& pts) {
            RationalMatrix m(6, 6);
            auto monos = ternary_monomials(2);
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t c = 0; c < 6; ++c)
                    m.at(i, c) = rational_pow(cfg.coord(0, pts[i]), monos[c][0]) *
                                 rational_pow(cfg.coord(1, pts[i]), monos[c][1]) *
                                 rational_pow(cfg.coord(2, pts[i]), monos[c][2]);
            return rank(m) < std::size_t{6};
        };
        // Enumerate 6-subsets in lexicographic order.
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                for (int c = b + 1; c < r; ++c)
                    for (int d = c + 1; d < r; ++d)
                        for (int e = d + 1; e < r; ++e)
                            for (int f = e + 1; f < r; ++f) {
                                idx = {a, b, c, d, e, f};
                                if (conic_singular(idx)) {
                                    std::vector<int> w;
                                    for (int v : idx)
                                        w.push_back(v + 1);
                                    return Violation{Violation::Kind::conic, w,
                                                     "six points lie on a conic"};
                                }
                            }
    }

    // Cubics (r = 8): passage through the seven other points plus the
    // three gradient conditions at P_i; a singular 10x10 system means a
    // cubic through all eight with a double point at P_i.
    if (r == 8) {
        auto monos = ternary_monomials(3);
        for (int i = 0; i < 8; ++i) {
            RationalMatrix m(10, 10);
            std::size_t row = 0;
            for (int j = 0; j < 8; ++j) {
                if (j == i)
                    continue;
                for (std::size_t c = 0; c < 10; ++c)
                    m.at(row, c) = rational_pow(cfg.coord(0, j), monos[c][0]) *
                                   rational_pow(cfg.coord(1, j), monos[c][1]) *
                                   rational_pow(cfg.coord(2, j), monos[c][2]);
                ++row;
            }
            for (int v = 0; v < 3; ++v) {
                for (std::size_t c = 0; c < 10; ++c) {
                    int e = monos[c][static_cast<std::size_t>(v)];
                    if (e == 0) {
                        m.at(row, c) = 0;
                        continue;
                    }
                    std::array<int, 3> de = monos[c];
                    de[static_cast<std::size_t>(v)] -= 1;
                    m.at(row, c) = Rational(e) * rational_pow(cfg.coord(0, i), de[0]) *
                                   rational_pow(cfg.coord(1, i), de[1]) *
                                   rational_pow(cfg.coord(2, i), de[2]);
                }
                ++row;
            }
            if (rank(m) < std::size_t{10})
                return Violation{Violation::Kind::cubic_double_point,
                                 {i + 1},
                                 "a cubic passes through all eight points with a double point at point " +
                                     std::to_string(i + 1)};
        }
    }

    cfg.validated = true;
    return std::nullopt;
}

std::vector<std::string> nagata_var_names(int r)
{
    std::vector<std::string> names;
    for (int j = 1; j <= r; ++j) {
        names.push_back("x" + std::to_string(j));
        names.push_back("y" + std::to_string(j));
    }
    return names;
}

std::array<MultiPoly, 3> w_forms(const PointConfiguration& cfg)
{
    require_validated(cfg);
    const int n = nagata_nvars(cfg.r);
    std::array<MultiPoly, 3> w{MultiPoly(n), MultiPoly(n), MultiPoly(n)};
    for (int i = 0; i < 3; ++i) {
        for (int j = 1; j <= cfg.r; ++j) {
            MultiPoly::Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(xvar(j))] = 1;
            for (int k = 1; k <= cfg.r; ++k)
                if (k != j)
                    e[static_cast<std::size_t>(yvar(k))] = 1;
            w[static_cast<std::size_t>(i)].add_term(e, cfg.coord(i, j - 1));
        }
    }
    return w;
}

std::vector<std::vector<Rational>> u_constraint_basis(const PointConfiguration& cfg)
{
    require_validated(cfg);
    RationalMatrix m(3, static_cast<std::size_t>(cfg.r));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < cfg.r; ++j)
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = cfg.coord(i, j);
    return kernel_basis(m);
}

bool satisfies_u_constraints(const PointConfiguration& cfg, const std::vector<Rational>& u)
{
    if (static_cast<int>(u.size()) != cfg.r)
        return false;
    for (int i = 0; i < 3; ++i) {
        Rational s(0);
        for (int j = 0; j < cfg.r; ++j)
            s += cfg.coord(i, j) * u[static_cast<std::size_t>(j)];
        if (s != 0)
            return false;
    }
    return true;
}

namespace {

MultiPoly apply_shear(const MultiPoly& p, const std::vector<Rational>& u, int r, bool formal)
{
    const int n = nagata_nvars(r) + (formal ? 1 : 0);
    MultiPoly out = formal ? p.extended(n) : p;
    for (int j = 1; j <= r; ++j) {
        const Rational& c = u[static_cast<std::size_t>(j - 1)];
        if (c == 0)
            continue;
        MultiPoly repl = MultiPoly::variable(n, xvar(j));
        MultiPoly::Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(yvar(j))] = 1;
        if (formal)
            e[static_cast<std::size_t>(n - 1)] = 1;
        repl.add_term(e, c);
        out = out.substitute(xvar(j), repl);
    }
    return out;
}

} // namespace

MultiPoly u_action(const MultiPoly& p, const std::vector<Rational>& u,
                   const PointConfiguration& cfg)
{
    require_validated(cfg);
    if (!satisfies_u_constraints(cfg, u))
        throw input_error("u does not satisfy the three point constraints");
    if (p.nvars() != nagata_nvars(cfg.r))
        throw input_error("polynomial variable count does not match configuration");
    return apply_shear(p, u, cfg.r, /*formal=*/false);
}

MultiPoly u_action_formal(const MultiPoly& p, const std::vector<Rational>& u,
                          const PointConfiguration& cfg)
{
    require_validated(cfg);
    if (!satisfies_u_constraints(cfg, u))
        throw input_error("u does not satisfy the three point constraints");
    if (p.nvars() != nagata_nvars(cfg.r))
        throw input_error("polynomial variable count does not match configuration");
    return apply_shear(p, u, cfg.r, /*formal=*/true);
}

std::optional<PicClass> multidegree(int r, const MultiPoly& p)
{
    if (p.is_zero())
        return std::nullopt;
    std::optional<PicClass> cls;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        std::int64_t d = 0;
        for (int j = 1; j <= r; ++j)
            d += e[static_cast<std::size_t>(xvar(j))];
        PicClass out(r);
        out[0] = d;
        for (int j = 1; j <= r; ++j) {
            std::int64_t cj = e[static_cast<std::size_t>(xvar(j))];
            std::int64_t ej = e[static_cast<std::size_t>(yvar(j))];
            out[j] = cj + ej - d; // = -m_j
        }
        if (!cls)
            cls = out;
        else if (!(*cls == out))
            return std::nullopt;
    }
    return cls;
}

std::int64_t component_dimension(const PointConfiguration& cfg, const PicClass& d)
{
    require_validated(cfg);
    if (d.r() != cfg.r)
        throw input_error("class rank does not match configuration");
    if (d[0] < 0)
        return 0;
    RationalMatrix m = interpolation_matrix(cfg, d);
    std::int64_t cols = static_cast<std::int64_t>(m.cols());
    return cols - static_cast<std::int64_t>(rank(m));
}

namespace {

// Memoized products of the three w forms, keyed by (i,j,k) exponents.
class WMonomialCache {
public:
    explicit WMonomialCache(const std::array<MultiPoly, 3>& w) : w_(w) {}

    const MultiPoly& get(int i, int j, int k)
    {
        auto key = std::array<int, 3>{i, j, k};
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        MultiPoly value(w_[0].nvars());
        if (i == 0 && j == 0 && k == 0)
            value = MultiPoly::constant(w_[0].nvars(), Rational(1));
        else if (i > 0)
            value = get(i - 1, j, k) * w_[0];
        else if (j > 0)
            value = get(i, j - 1, k) * w_[1];
        else
            value = get(i, j, k - 1) * w_[2];
        return cache_.emplace(key, std::move(value)).first->second;
    }

private:
    const std::array<MultiPoly, 3>& w_;
    std::map<std::array<int, 3>, MultiPoly> cache_;
};

} // namespace

SectionSpace section_basis(const PointConfiguration& cfg, const PicClass& d)
{
    require_validated(cfg);
    if (d.r() != cfg.r)
        throw input_error("class rank does not match configuration");

    SectionSpace out{d, {}, {}};
    if (d[0] < 0)
        return out;

    RationalMatrix m = interpolation_matrix(cfg, d);
    out.plane_model = kernel_basis(m);
    if (out.plane_model.empty())
        return out;

    const int deg = static_cast<int>(d[0]);
    auto monos = ternary_monomials(deg);
    auto w = w_forms(cfg);
    WMonomialCache cache(w);

    for (const auto& coeffs : out.plane_model) {
        MultiPoly g(nagata_nvars(cfg.r));
        for (std::size_t c = 0; c < coeffs.size(); ++c) {
            if (coeffs[c] == 0)
                continue;
            g += coeffs[c] * cache.get(monos[c][0], monos[c][1], monos[c][2]);
        }
        for (int j = 1; j <= cfg.r; ++j) {
            int mj = static_cast<int>(-d[j]);
            if (mj > 0)
                g = g.divided_exact(yvar(j), mj);
            else if (mj < 0)
                g = g.shifted(yvar(j), -mj);
        }
        auto cls = multidegree(cfg.r, g);
        if (!cls || !(*cls == d))
            throw internal_error("section polynomial landed outside its component");
        out.basis.push_back(std::move(g));
    }
    return out;
}

std::int64_t span_rank(const std::vector<MultiPoly>& polys)
{
    std::map<MultiPoly::Exponents, std::size_t> columns;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            columns.emplace(e, 0);
        }
    if (columns.empty())
        return 0;
    std::size_t idx = 0;
    for (auto& [e, col] : columns)
        col = idx++;
    RationalMatrix m(polys.size(), columns.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [e, c] : polys[i].terms())
            m.at(i, columns.at(e)) = c;
    return static_cast<std::int64_t>(rank(m));
}

std::int64_t product_span_dim(const PointConfiguration& cfg,
                              const std::vector<PicClass>& factor_classes,
                              const PicClass& target)
{
    require_validated(cfg);
    PicClass sum(cfg.r);
    for (const auto& f : factor_classes)
        sum += f;
    if (!(sum == target))
        throw input_error("factor classes do not sum to the target class");

    std::map<PicClass, SectionSpace> bases;
    for (const auto& f : factor_classes)
        if (!bases.count(f))
            bases.emplace(f, section_basis(cfg, f));
    for (const auto& [cls, space] : bases)
        if (space.basis.empty())
            return 0;

    std::vector<MultiPoly> products;
    std::vector<std::size_t> choice(factor_classes.size(), 0);
    while (true) {
        MultiPoly p = MultiPoly::constant(nagata_nvars(cfg.r), Rational(1));
        for (std::size_t i = 0; i < factor_classes.size(); ++i)
            p *= bases.at(factor_classes[i]).basis[choice[i]];
        products.push_back(std::move(p));
        // Next ordered choice.
        std::size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < bases.at(factor_classes[pos]).basis.size())
                break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size())
            break;
    }
    return span_rank(products);
}

PointConfiguration sample_points(int r, std::uint64_t seed, bool standard_prefix)
{
    if (r < kMinRank || r > kMaxRank)
        throw input_error("rank r must be in [3,8]");
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return Rational(static_cast<long>(rng() % 41) - 20); };

    const int fixed = (standard_prefix && r >= 4) ? 4 : 0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PointConfiguration cfg;
        cfg.r = r;
        if (fixed == 4) {
            cfg.points.push_back({Rational(1), Rational(0), Rational(0)});
            cfg.points.push_back({Rational(0), Rational(1), Rational(0)});
            cfg.points.push_back({Rational(0), Rational(0), Rational(1)});
            cfg.points.push_back({Rational(1), Rational(1), Rational(1)});
        }
        for (int j = fixed; j < r; ++j) {
            std::array<Rational, 3> p;
            do {
                p = {draw(), draw(), draw()};
            } while (p[0] == 0 && p[1] == 0 && p[2] == 0);
            cfg.points.push_back(p);
        }
        if (!validate_general_position(cfg))
            return cfg;
    }
    throw resource_error("point sampling exceeded 1000 rejection attempts");
}

std::string points_to_json(const PointConfiguration& cfg)
{
    nlohmann::json j;
    j["r"] = cfg.r;
    auto arr = nlohmann::json::array();
    for (const auto& p : cfg.points)
        arr.push_back({to_string(p[0]), to_string(p[1]), to_string(p[2])});
    j["points"] = arr;
    return j.dump(2) + "\n";
}

PointConfiguration points_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad points JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("r") || !j.contains("points"))
        throw input_error("points JSON needs fields \"r\" and \"points\"");
    if (!j["r"].is_number_integer())
        throw input_error("\"r\" must be an integer");
    if (!j["points"].is_array())
        throw input_error("\"points\" must be an array");
    PointConfiguration cfg;
    cfg.r = j["r"].get<int>();
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 3)
            throw input_error("each point needs three coordinates");
        for (const auto& coord : p)
            if (!coord.is_string())
                throw input_error("coordinates must be rational strings");
        cfg.points.push_back({parse_rational(p[0].get<std::string>()),
                              parse_rational(p[1].get<std::string>()),
                              parse_rational(p[2].get<std::string>())});
    }
    check_config_shape(cfg);
    return cfg;
}

PointConfiguration read_points_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open points file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return points_from_json(ss.str());
}

void write_points_file(const std::string& path, const PointConfiguration& cfg)
{
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write points file: " + path);
    out << points_to_json(cfg);
}

} // namespace coxdp
