#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxdp/coxring.hpp"
#include "coxdp/errors.hpp"

using coxdp::DelPezzoLattice;
using coxdp::HilbertData;
using coxdp::PicClass;
using coxdp::PointConfiguration;

TEST_CASE("degree-one generator classes")
{
    const std::size_t class_counts[] = {6, 10, 16, 27, 56, 241};
    const std::int64_t section_counts[] = {6, 10, 16, 27, 56, 242};
    for (int r = 3; r <= 8; ++r) {
        DelPezzoLattice lat(r);
        auto gens = coxdp::degree_one_classes(lat);
        CHECK(gens.size() == class_counts[r - 3]);
        CHECK(std::is_sorted(gens.begin(), gens.end()));
        for (const PicClass& g : gens)
            CHECK(coxdp::degree(g) == 1);
        CHECK(coxdp::generator_count(lat) == section_counts[r - 3]);
        CHECK(coxdp::cox_dimension(lat, 1) == section_counts[r - 3]);
    }
}

TEST_CASE("effective classes per degree, small cases")
{
    DelPezzoLattice lat3(3);
    auto zero = coxdp::effective_classes_of_degree(lat3, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == lat3.zero());
    CHECK(coxdp::effective_classes_of_degree(lat3, 1) == lat3.exceptional_curves());
    CHECK_THROWS_AS(coxdp::effective_classes_of_degree(lat3, -1), coxdp::input_error);
}

TEST_CASE("sumset enumeration agrees with a boxed h0 search")
{
    // Degree-n sums of generator classes have a_0 <= 2n and |a_j| <= n
    // at r <= 4, so the box [0,2n] x [-2n,n]^r is exhaustive for both
    // sides of the comparison.
    for (int r : {3, 4}) {
        DelPezzoLattice lat(r);
        for (int n = 0; n <= 3; ++n) {
            auto sumset = coxdp::effective_classes_of_degree(lat, n);
            for (const PicClass& d : sumset) {
                CHECK(d[0] >= 0);
                CHECK(d[0] <= 2 * n);
                for (int j = 1; j <= r; ++j) {
                    CHECK(d[j] >= -2 * n);
                    CHECK(d[j] <= n);
                }
                CHECK(lat.h0(d) > 0);
            }
            std::set<PicClass> expect;
            PicClass d(r);
            for (d[0] = 0; d[0] <= 2 * n; ++d[0]) {
                std::vector<std::int64_t> idx(static_cast<std::size_t>(r), 0);
                bool done = false;
                while (!done) {
                    for (int j = 1; j <= r; ++j)
                        d[j] = idx[static_cast<std::size_t>(j - 1)] - 2 * n;
                    if (coxdp::degree(d) == n && lat.h0(d) > 0)
                        expect.insert(d);
                    int pos = 0;
                    while (pos < r) {
                        if (++idx[static_cast<std::size_t>(pos)] <= 3 * n)
                            break;
                        idx[static_cast<std::size_t>(pos)] = 0;
                        ++pos;
                    }
                    done = pos == r;
                }
            }
            CHECK(std::set<PicClass>(sumset.begin(), sumset.end()) == expect);
        }
    }
}

TEST_CASE("graded dimensions of the r = 3 polynomial ring")
{
    DelPezzoLattice lat(3);
    const std::int64_t dims[] = {1, 6, 21, 56};
    for (int n = 0; n <= 3; ++n)
        CHECK(coxdp::cox_dimension(lat, n) == dims[n]);
}

TEST_CASE("graded dimensions of the r = 4 Grassmannian ring")
{
    DelPezzoLattice lat(4);
    CHECK(coxdp::cox_dimension(lat, 1) == 10);
    CHECK(coxdp::cox_dimension(lat, 2) == 50);
}

TEST_CASE("dimension table structure and Weyl stability")
{
    DelPezzoLattice lat(4);
    auto table = coxdp::build_dimension_table(lat, 3);
    REQUIRE(table.entries.size() == 4);
    CHECK(table.entries[0].classes == std::vector<PicClass>{lat.zero()});
    CHECK(table.entries[0].dimension == 1);
    CHECK(table.entries[1].dimension == coxdp::generator_count(lat));
    for (const auto& entry : table.entries) {
        std::set<PicClass> classes(entry.classes.begin(), entry.classes.end());
        for (const PicClass& root : lat.simple_roots()) {
            std::set<PicClass> reflected;
            for (const PicClass& d : classes)
                reflected.insert(coxdp::reflect(d, root));
            CHECK(reflected == classes);
        }
        std::int64_t dim = 0;
        for (const PicClass& d : entry.classes)
            dim += lat.h0(d);
        CHECK(dim == entry.dimension);
    }
}

TEST_CASE("hilbert numerators for the small ranks")
{
    DelPezzoLattice lat3(3);
    HilbertData h3 = coxdp::hilbert_numerator(lat3);
    CHECK(h3.numerator == std::vector<std::int64_t>{1});
    CHECK(h3.krull_dim == 6);
    CHECK(h3.a_invariant == -6);
    CHECK(coxdp::gorenstein_palindrome_check(h3));
    CHECK(coxdp::a_invariant_check(h3));

    DelPezzoLattice lat4(4);
    HilbertData h4 = coxdp::hilbert_numerator(lat4);
    CHECK(h4.numerator == std::vector<std::int64_t>{1, 3, 1});
    CHECK(h4.a_invariant == -5);
    CHECK(coxdp::gorenstein_palindrome_check(h4));
    CHECK(coxdp::a_invariant_check(h4));

    DelPezzoLattice lat5(5);
    HilbertData h5 = coxdp::hilbert_numerator(lat5);
    REQUIRE(h5.numerator.size() == 5);
    CHECK(h5.numerator[0] == 1);
    CHECK(coxdp::gorenstein_palindrome_check(h5));
    CHECK(coxdp::a_invariant_check(h5));
    for (std::int64_t c : h5.numerator)
        CHECK(c >= 0);
}

TEST_CASE("hilbert numerator guards its supported range")
{
    DelPezzoLattice lat7(7);
    CHECK_THROWS_AS(coxdp::hilbert_numerator(lat7), coxdp::input_error);
    DelPezzoLattice lat8(8);
    CHECK_THROWS_AS(coxdp::hilbert_numerator(lat8, true), coxdp::input_error);
}

TEST_CASE("palindromy and a-invariant checks on crafted data")
{
    HilbertData fake;
    fake.r = 4;
    fake.krull_dim = 7;
    fake.numerator = {1, 2, 3};
    fake.a_invariant = -5;
    CHECK(!coxdp::gorenstein_palindrome_check(fake));
    CHECK(coxdp::a_invariant_check(fake));
    fake.numerator = {1, 3, 3, 1};
    CHECK(coxdp::gorenstein_palindrome_check(fake));
    CHECK(!coxdp::a_invariant_check(fake));
}

TEST_CASE("quadratic relation counts")
{
    // r=3 is a polynomial ring, r=4 carries the five Pluecker relations.
    // r=5: 16 generators give 136 symmetric products; the 106 effective
    // degree-2 classes carry total dimension 116 (the ten ruling classes
    // l_0-l_i and 2l_0-l_j-l_k-l_m-l_n have h0 = 2, the remaining 96
    // have h0 = 1), hence 136 - 116 = 20 relations. The count must not
    // depend on the configuration.
    PointConfiguration p3 = coxdp::sample_points(3, 1);
    CHECK(coxdp::quadratic_relation_count(p3) == 0);

    PointConfiguration p4 = coxdp::sample_points(4, 1);
    CHECK(coxdp::quadratic_relation_count(p4) == 5);
    PointConfiguration p4b = coxdp::sample_points(4, 6, false);
    CHECK(coxdp::quadratic_relation_count(p4b) == 5);

    PointConfiguration p5 = coxdp::sample_points(5, 1);
    CHECK(coxdp::quadratic_relation_count(p5) == 20);
    PointConfiguration p5b = coxdp::sample_points(5, 2);
    CHECK(coxdp::quadratic_relation_count(p5b) == 20);

    PointConfiguration p6 = coxdp::sample_points(6, 1);
    CHECK_THROWS_AS(coxdp::quadratic_relation_count(p6), coxdp::input_error);

    PointConfiguration unvalidated = p5;
    unvalidated.validated = false;
    CHECK_THROWS_AS(coxdp::quadratic_relation_count(unvalidated), coxdp::input_error);
}

TEST_CASE("chart checks across the blow-down")
{
    DelPezzoLattice lat4(4);
    DelPezzoLattice lat3(3);
    PicClass antik3(3, {3, -1, -1, -1});
    CHECK(coxdp::chart_check(lat4, lat3, PicClass::basis(4, 4), antik3));
    CHECK(coxdp::chart_check(lat4, lat3, PicClass::basis(4, 4), PicClass(3)));
    // A chart class away from l_r exercises the Weyl transport.
    CHECK(coxdp::chart_check(lat4, lat3, PicClass(4, {1, -1, -1, 0, 0}), antik3));
    CHECK(coxdp::chart_check(lat4, lat3, PicClass::basis(4, 1), PicClass(3, {2, -1, 0, 0})));

    CHECK_THROWS_AS(coxdp::chart_check(lat4, lat3, PicClass::basis(4, 0), antik3),
                    coxdp::input_error);
    CHECK_THROWS_AS(coxdp::chart_check(lat4, lat3, PicClass::basis(4, 4), PicClass(4)),
                    coxdp::input_error);
    DelPezzoLattice lat5(5);
    CHECK_THROWS_AS(coxdp::chart_check(lat5, lat3, PicClass::basis(5, 5), antik3),
                    coxdp::input_error);
}

TEST_CASE("gap probe on frozen r = 8 components")
{
    PointConfiguration p8 = coxdp::sample_points(8, 1);
    DelPezzoLattice lat8(8);

    auto antik = coxdp::gap_probe(p8, lat8.anticanonical(), 3);
    CHECK(antik.subring_dim == 0);
    CHECK(antik.full_dim == 2);

    auto single = coxdp::gap_probe(p8, PicClass::basis(8, 8), 3);
    CHECK(single.subring_dim == 1);
    CHECK(single.full_dim == 1);

    auto pair = coxdp::gap_probe(p8, PicClass::basis(8, 7) + PicClass::basis(8, 8), 3);
    CHECK(pair.subring_dim == 1);
    CHECK(pair.full_dim == 1);

    auto zero = coxdp::gap_probe(p8, lat8.zero(), 3);
    CHECK(zero.subring_dim == 1);
    CHECK(zero.full_dim == 1);

    CHECK_THROWS_AS(coxdp::gap_probe(p8, 2 * lat8.anticanonical(), 1), coxdp::resource_error);
    PointConfiguration p5 = coxdp::sample_points(5, 1);
    CHECK_THROWS_AS(coxdp::gap_probe(p5, lat8.anticanonical(), 3), coxdp::input_error);
}

TEST_CASE("jacobian rank of the r = 3 generator sections")
{
    PointConfiguration cfg = coxdp::sample_points(3, 4);
    DelPezzoLattice lat(3);
    std::vector<coxdp::MultiPoly> sections;
    for (const PicClass& cls : coxdp::degree_one_classes(lat)) {
        auto space = coxdp::section_basis(cfg, cls);
        REQUIRE(space.basis.size() == 1);
        sections.push_back(space.basis[0]);
    }
    std::vector<coxdp::Rational> point;
    for (long v : {2, 3, 5, 7, 11, 13})
        point.push_back(coxdp::Rational(v));
    CHECK(coxdp::jacobian_rank_at(sections, point) == 6);
    CHECK(coxdp::jacobian_rank_at({}, {}) == 0);
    CHECK_THROWS_AS(coxdp::jacobian_rank_at(sections, {coxdp::Rational(1)}),
                    coxdp::input_error);
}
