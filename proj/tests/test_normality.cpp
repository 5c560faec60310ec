#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qrs/normality.hpp"

using namespace qrs;

namespace {

using Cert = std::array<std::pair<int, int>, 2>;

std::multiset<Cert> exponent_multiset(const std::vector<FoundNormal>& v) {
    std::multiset<Cert> out;
    for (const auto& f : v) out.insert(f.exponents);
    return out;
}

}  // namespace

TEST_CASE("certificates of the classified normal elements") {
    const Presentation& v = build_presentation(Algebra::V);
    NormalityCertificate z = is_rs_central(derived_element("Z", v).value, v, 6);
    REQUIRE(z.central);
    CHECK(z.str() == "(e1: r^-2 s^-2, e2: r^1 s^1)");
    NormalityCertificate zp = is_rs_central(derived_element("Zp", v).value, v, 8);
    REQUIRE(zp.central);
    CHECK(zp.str() == "(e1: r^-2 s^-2, e2: r^2 s^2)");

    const Presentation& u = build_presentation(Algebra::U);
    ExpVec x3(3, 0);
    x3[1] = 1;
    NormalityCertificate c3 = is_rs_central(PBWElement::monomial(Laurent(1), x3), u, 4);
    REQUIRE(c3.central);
    CHECK(c3.exponents == Cert{{{-1, 0}, {1, 0}}});
    NormalityCertificate c3p = is_rs_central(derived_element("X3p", u).value, u, 4);
    REQUIRE(c3p.central);
    CHECK(c3p.exponents == Cert{{{0, -1}, {0, 1}}});
}

TEST_CASE("refutations carry a residual") {
    const Presentation& v = build_presentation(Algebra::V);
    ExpVec x1(4, 0);
    x1[0] = 1;
    NormalityCertificate c = is_rs_central(PBWElement::monomial(Laurent(1), x1), v, 4);
    REQUIRE(!c.central);
    CHECK(c.refuting_generator == 1);
    CHECK(c.residual.str(v) == "X2");
    CHECK_THROWS_AS(is_rs_central(PBWElement{}, v, 4), ZeroElement);
}

TEST_CASE("products of normal elements stay normal") {
    const Presentation& v = build_presentation(Algebra::V);
    PBWElement z = derived_element("Z", v).value;
    PBWElement zp = derived_element("Zp", v).value;
    PBWElement zzp = multiply(z, zp, v);
    NormalityCertificate c = is_rs_central(zzp, v, 16);
    REQUIRE(c.central);
    // exponents add: (-2,-2)+(-2,-2) and (1,1)+(2,2)
    CHECK(c.exponents == Cert{{{-4, -4}, {3, 3}}});
    // Z and Z' q-commute: Z Z' = r^-2 s^-2 Z' Z
    CHECK(zzp == multiply(zp, z, v).scaled(Laurent::rs(-2, -2)));
}

TEST_CASE("pruned search equals the full-grid reference on small weights") {
    for (Algebra a : {Algebra::U, Algebra::V}) {
        const Presentation& p = build_presentation(a);
        for (Weight w : {Weight{1, 1}, Weight{1, 2}, Weight{2, 1}, Weight{2, 2}}) {
            auto fast = find_normal(w, p, 3);
            auto ref = find_normal_reference(w, p, 3);
            CHECK(exponent_multiset(fast) == exponent_multiset(ref));
            for (const auto& f : fast) {
                NormalityCertificate c = is_rs_central(f.element, p, 3);
                CHECK(c.central);
                CHECK(c.exponents == f.exponents);
            }
        }
    }
}

TEST_CASE("grid boundary is flagged") {
    const Presentation& v = build_presentation(Algebra::V);
    auto found = find_normal(Weight{1, 2}, v, 2);
    REQUIRE(found.size() == 1);
    CHECK(found[0].on_grid_boundary);  // e1 exponents (-2,-2) sit on the edge
    auto wide = find_normal(Weight{1, 2}, v, 6);
    REQUIRE(wide.size() == 1);
    CHECK(!wide[0].on_grid_boundary);
}

TEST_CASE("trivial centers") {
    for (Algebra a : {Algebra::U, Algebra::V}) {
        const Presentation& p = build_presentation(a);
        auto basis = center_basis(6, p);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == PBWElement::one(p.ngens()));
    }
}

TEST_CASE("normal span agrees with the predicted classification to degree 6") {
    for (Algebra a : {Algebra::U, Algebra::V}) {
        const Presentation& p = build_presentation(a);
        SpanReport rep = normal_span_report(6, p);
        CHECK(rep.all_agree());
        size_t nonzero = 0;
        for (const auto& e : rep.entries) {
            CHECK(e.agree);
            CHECK(!e.truncation_flag);
            if (e.dimension_found) ++nonzero;
        }
        CHECK(nonzero > 0);
    }
}

TEST_CASE("predicted weights are exactly m(1,2)+n(2,2) for V") {
    const Presentation& v = build_presentation(Algebra::V);
    CHECK(predicted_normals(Weight{1, 2}, v).size() == 1);
    CHECK(predicted_normals(Weight{2, 2}, v).size() == 1);
    CHECK(predicted_normals(Weight{3, 4}, v).size() == 1);  // Z Z'
    CHECK(predicted_normals(Weight{2, 4}, v).size() == 1);  // Z^2
    CHECK(predicted_normals(Weight{1, 1}, v).empty());
    CHECK(predicted_normals(Weight{2, 3}, v).empty());
    const Presentation& u = build_presentation(Algebra::U);
    CHECK(predicted_normals(Weight{2, 2}, u).size() == 3);  // X3^i X3'^j, i+j=2
    CHECK(predicted_normals(Weight{1, 0}, u).empty());
}

TEST_CASE("default grid bound") {
    CHECK(default_grid_bound(Weight{0, 0}) == 2);
    CHECK(default_grid_bound(Weight{1, 2}) == 8);
    CHECK(default_grid_bound(Weight{3, 3}) == 14);
}
