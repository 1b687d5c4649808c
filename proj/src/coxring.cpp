#include "coxdp/coxring.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "coxdp/errors.hpp"

namespace coxdp {

namespace {

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t v = 1;
    for (int i = 1; i <= k; ++i)
        v = v * (n - k + i) / i;
    return v;
}

std::vector<PicClass> sumset_step(const std::vector<PicClass>& prev,
                                  const std::vector<PicClass>& gens)
{
    std::unordered_set<PicClass, PicClassHash> next;
    next.reserve(prev.size() * 4 + 16);
    for (const PicClass& s : prev)
        for (const PicClass& g : gens)
            next.insert(s + g);
    std::vector<PicClass> out(next.begin(), next.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<PicClass> degree_one_classes(const DelPezzoLattice& lat)
{
    std::vector<PicClass> gens = lat.exceptional_curves();
    if (lat.r() == 8) {
        gens.push_back(lat.anticanonical());
        std::sort(gens.begin(), gens.end());
    }
    return gens;
}

std::vector<PicClass> effective_classes_of_degree(const DelPezzoLattice& lat, int n)
{
    if (n < 0)
        throw input_error("degree must be nonnegative");
    std::vector<PicClass> level = {lat.zero()};
    if (n == 0)
        return level;
    const std::vector<PicClass> gens = degree_one_classes(lat);
    for (int k = 0; k < n; ++k)
        level = sumset_step(level, gens);
    return level;
}

std::int64_t cox_dimension(const DelPezzoLattice& lat, int n)
{
    std::int64_t dim = 0;
    for (const PicClass& d : effective_classes_of_degree(lat, n))
        dim += lat.h0(d);
    return dim;
}

GradedDimensionTable build_dimension_table(const DelPezzoLattice& lat, int max_degree)
{
    if (max_degree < 0)
        throw input_error("degree must be nonnegative");
    GradedDimensionTable table;
    table.r = lat.r();
    const std::vector<PicClass> gens = degree_one_classes(lat);
    std::vector<PicClass> level = {lat.zero()};
    for (int n = 0; n <= max_degree; ++n) {
        if (n > 0)
            level = sumset_step(level, gens);
        DegreeEntry entry;
        entry.classes = level;
        for (const PicClass& d : level)
            entry.dimension += lat.h0(d);
        table.entries.push_back(std::move(entry));
    }
    return table;
}

HilbertData hilbert_numerator(const DelPezzoLattice& lat, bool allow_r7)
{
    const int r = lat.r();
    if (r == 8)
        throw input_error("hilbert numerator at r = 8 is out of scale");
    if (r == 7 && !allow_r7)
        throw input_error("hilbert numerator at r = 7 needs the allow flag");

    const int s_expected = 2 * r - 6;
    const int guard = s_expected + 1;
    GradedDimensionTable table = build_dimension_table(lat, guard);

    // Coefficients of (sum dims t^n) * (1-t)^{r+3} through the guard.
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(guard) + 1, 0);
    for (int k = 0; k <= guard; ++k) {
        std::int64_t c = 0;
        for (int i = 0; i <= std::min(k, r + 3); ++i) {
            std::int64_t sign = (i % 2 == 0) ? 1 : -1;
            c += sign * binomial(r + 3, i) *
                 table.entries[static_cast<std::size_t>(k - i)].dimension;
        }
        coeff[static_cast<std::size_t>(k)] = c;
    }
    if (coeff.back() != 0)
        throw internal_error("hilbert numerator guard coefficient is nonzero");

    std::vector<std::int64_t> numerator(coeff.begin(), coeff.end() - 1);
    while (numerator.size() > 1 && numerator.back() == 0)
        numerator.pop_back();

    HilbertData h;
    h.r = r;
    h.krull_dim = r + 3;
    h.numerator = std::move(numerator);
    h.a_invariant = static_cast<int>(h.numerator.size()) - 1 - (r + 3);
    return h;
}

bool gorenstein_palindrome_check(const HilbertData& h)
{
    const auto& c = h.numerator;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != c[c.size() - 1 - i])
            return false;
    return true;
}

bool a_invariant_check(const HilbertData& h)
{
    return static_cast<int>(h.numerator.size()) - 1 == 2 * h.r - 6;
}

std::int64_t generator_count(const DelPezzoLattice& lat)
{
    std::int64_t n = 0;
    for (const PicClass& d : degree_one_classes(lat))
        n += lat.h0(d);
    return n;
}

std::int64_t quadratic_relation_count(const PointConfiguration& points, bool allow_large)
{
    if (!points.validated)
        throw input_error("point configuration has not passed general-position validation");
    if (points.r > 5 && !allow_large)
        throw input_error("quadratic relation count beyond r = 5 needs the allow flag");

    DelPezzoLattice lat(points.r);
    std::vector<PicClass> classes;
    std::vector<MultiPoly> sections;
    for (const PicClass& cls : degree_one_classes(lat)) {
        SectionSpace space = section_basis(points, cls);
        if (static_cast<std::int64_t>(space.basis.size()) != lat.h0(cls))
            throw internal_error("degree-1 section space has unexpected dimension");
        for (auto& b : space.basis) {
            classes.push_back(cls);
            sections.push_back(std::move(b));
        }
    }

    const std::size_t n = sections.size();
    std::map<PicClass, std::vector<MultiPoly>> products;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            products[classes[i] + classes[j]].push_back(sections[i] * sections[j]);

    std::int64_t rank_sum = 0;
    for (const auto& [cls, group] : products) {
        (void)cls;
        rank_sum += span_rank(group);
    }
    return static_cast<std::int64_t>(n * (n + 1) / 2) - rank_sum;
}

bool chart_check(const DelPezzoLattice& lat, const DelPezzoLattice& sublat,
                 const PicClass& e, const PicClass& d2, int max_k)
{
    const int r = lat.r();
    if (r < 4)
        throw input_error("chart check needs r >= 4");
    if (sublat.r() != r - 1)
        throw input_error("sublattice rank must be r - 1");
    if (!lat.is_exceptional(e))
        throw input_error("chart class must be exceptional");
    if (d2.r() != r - 1)
        throw input_error("second class must live in the rank r - 1 lattice");
    if (max_k < 0)
        throw input_error("saturation range must be nonnegative");

    auto word = lat.weyl_word(PicClass::basis(r, r), e);
    if (!word)
        throw internal_error("exceptional class outside the orbit of l_r");

    PicClass p(r);
    for (int i = 0; i < r; ++i)
        p[i] = d2[i];
    p[r] = 0;
    for (const PicClass& root : *word)
        p = reflect(p, root);
    if (pairing(p, e) != 0)
        throw internal_error("transported class is not orthogonal to the chart class");

    const std::int64_t base = sublat.h0(d2);
    if (lat.h0(p) != base)
        return false;
    for (int k = 1; k <= max_k; ++k)
        if (lat.h0(p + k * e) != base)
            return false;
    return true;
}

namespace {

void collect_multisets(const std::vector<PicClass>& ex, std::size_t start, int k,
                       const PicClass& target, std::vector<PicClass>& chosen,
                       std::vector<std::vector<PicClass>>& out)
{
    if (k == 1) {
        auto it = std::lower_bound(ex.begin() + static_cast<std::ptrdiff_t>(start), ex.end(),
                                   target);
        if (it != ex.end() && *it == target) {
            chosen.push_back(target);
            out.push_back(chosen);
            chosen.pop_back();
        }
        return;
    }
    for (std::size_t i = start; i < ex.size(); ++i) {
        PicClass rest = target - ex[i];
        // Componentwise box of (k-1)-fold sums of exceptional classes.
        if (rest[0] < 0 || rest[0] > 6 * (k - 1))
            continue;
        bool ok = true;
        for (int j = 1; j <= rest.r(); ++j)
            if (rest[j] < -3 * (k - 1) || rest[j] > k - 1) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        chosen.push_back(ex[i]);
        collect_multisets(ex, i, k - 1, rest, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

GapProbeResult gap_probe(const PointConfiguration& points, const PicClass& d,
                         int max_factor_degree)
{
    if (points.r != 8)
        throw input_error("gap probe is an r = 8 experiment");
    if (!points.validated)
        throw input_error("point configuration has not passed general-position validation");
    if (d.r() != 8)
        throw input_error("class rank does not match configuration");

    const std::int64_t n = degree(d);
    if (n > max_factor_degree)
        throw resource_error("class degree exceeds the factor cap");

    GapProbeResult res;
    res.full_dim = component_dimension(points, d);
    if (n < 0)
        return res;
    if (n == 0) {
        res.subring_dim = d.is_zero() ? 1 : 0;
        return res;
    }

    DelPezzoLattice lat(8);
    const auto& ex = lat.exceptional_curves();
    std::vector<std::vector<PicClass>> multisets;
    std::vector<PicClass> chosen;
    collect_multisets(ex, 0, static_cast<int>(n), d, chosen, multisets);

    std::map<PicClass, SectionSpace> cache;
    std::vector<MultiPoly> products;
    for (const auto& factors : multisets) {
        for (const PicClass& cls : factors)
            if (!cache.count(cls))
                cache.emplace(cls, section_basis(points, cls));
        std::vector<std::size_t> choice(factors.size(), 0);
        while (true) {
            MultiPoly p = MultiPoly::constant(nagata_nvars(8), Rational(1));
            bool dead = false;
            for (std::size_t i = 0; i < factors.size() && !dead; ++i) {
                const auto& basis = cache.at(factors[i]).basis;
                if (basis.empty())
                    dead = true;
                else
                    p *= basis[choice[i]];
            }
            if (dead)
                break;
            products.push_back(std::move(p));
            std::size_t pos = 0;
            while (pos < choice.size()) {
                if (++choice[pos] < cache.at(factors[pos]).basis.size())
                    break;
                choice[pos] = 0;
                ++pos;
            }
            if (pos == choice.size())
                break;
        }
    }
    res.subring_dim = span_rank(products);
    return res;
}

std::int64_t jacobian_rank_at(const std::vector<MultiPoly>& polys,
                              const std::vector<Rational>& point)
{
    if (polys.empty())
        return 0;
    const int nv = polys[0].nvars();
    if (static_cast<int>(point.size()) != nv)
        throw input_error("evaluation point has the wrong arity");
    RationalMatrix m(polys.size(), static_cast<std::size_t>(nv));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].nvars() != nv)
            throw input_error("polynomials must share one variable set");
        for (int j = 0; j < nv; ++j)
            m.at(i, static_cast<std::size_t>(j)) = polys[i].derivative(j).eval(point);
    }
    return static_cast<std::int64_t>(rank(m));
}

} // namespace coxdp
