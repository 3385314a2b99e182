#include "doctest.h"

#include "rsf/errors.hpp"
#include "rsf/froyshov.hpp"

#include <numeric>

using namespace rsf;

namespace {

std::vector<LinkDesc> supported_knots()
{
    std::vector<LinkDesc> out{LinkDesc::unknot()};
    for (std::int64_t p = 3; p <= 25; p += 2)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) out.push_back(LinkDesc::two_bridge(p, q));
    for (std::int64_t p = 2; p <= 63; ++p)
        for (std::int64_t q = p + 1; p * q <= 63; ++q) {
            if (std::gcd(p, q) != 1) continue;
            bool odd = p % 2 == 1 && q % 2 == 1;
            if (odd || p == 2) out.push_back(LinkDesc::torus(p, q));
        }
    for (std::int64_t n : {5, 7, 11, 13, 17, 19, 23, 25}) out.push_back(LinkDesc::montesinos236(n));
    return out;
}

bool denominator_ok(const Rat& r) { return denominator_divides(r, 16); }

}  // namespace

TEST_CASE("Delta triples of basic families")
{
    auto u = delta_triple(LinkDesc::unknot());
    CHECK(u.delta == 0);
    CHECK(*u.dbar == 0);
    CHECK(*u.dunder == 0);

    auto k = delta_triple(LinkDesc::two_bridge(3, 1));
    CHECK(k.delta == make_rat(1, 8));
    CHECK(*k.dbar == make_rat(1, 8));
    CHECK(*k.dunder == make_rat(1, 8));
    CHECK(delta_to_json(k) == nlohmann::json{{"delta", "1/8"}, {"dbar", "1/8"}, {"dunder", "1/8"},
                                             {"provenance", "family-formula"}});

    auto m = delta_triple(LinkDesc::montesinos236(11));
    CHECK(*m.dbar == make_rat(1, 2));
    CHECK(m.delta == make_rat(1, 2));
    CHECK(*m.dunder == 0);
    CHECK(m.provenance == Provenance::Table);
}

TEST_CASE("Montesinos table rows for k = 1..4")
{
    for (std::int64_t k = 1; k <= 4; ++k) {
        auto a = delta_triple(LinkDesc::montesinos236(12 * k - 1));
        CHECK(*a.dbar == make_rat(1, 2));
        CHECK(a.delta == make_rat(1, 2));
        CHECK(*a.dunder == 0);
        auto b = delta_triple(LinkDesc::montesinos236(12 * k - 5));
        CHECK(*b.dbar == 0);
        CHECK(b.delta == 0);
        CHECK(*b.dunder == make_rat(-1, 2));
        auto c = delta_triple(LinkDesc::montesinos236(12 * k + 1));
        CHECK(c.delta == 0);
        CHECK(*c.dbar == 0);
        CHECK(*c.dunder == 0);
        auto d = delta_triple(LinkDesc::montesinos236(12 * k + 5));
        CHECK(d.delta == make_rat(1, 2));
        CHECK(*d.dbar == make_rat(1, 2));
        CHECK(*d.dunder == make_rat(1, 2));
    }
}

TEST_CASE("Odd torus knots through mubar")
{
    CHECK(delta_triple(LinkDesc::torus(3, 5)).delta == make_rat(1, 2));
    CHECK(delta_triple(LinkDesc::torus(3, 7)).delta == make_rat(-1, 2));
    CHECK(delta_triple(LinkDesc::torus(3, 11)).delta == 0);
    CHECK(delta_triple(LinkDesc::torus(3, 13)).delta == 0);
    CHECK(delta_triple(LinkDesc::torus(3, 19)).delta == make_rat(-1, 2));

    // Rokhlin parity: -mubar/2 agrees with -sigma/16 modulo 1.
    for (std::int64_t p = 3; p <= 15; p += 2)
        for (std::int64_t q = p + 2; p * q <= 255; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            auto l = LinkDesc::torus(p, q);
            Rat diff = delta_triple(l).delta + make_rat(link_signature(l), 16);
            CHECK(is_integer(diff));
        }

    // The torus path and the Montesinos table agree on residues 1 and 5.
    for (std::int64_t k = 1; k <= 4; ++k)
        for (std::int64_t q : {12 * k + 1, 12 * k + 5}) {
            auto t = delta_triple(LinkDesc::torus(3, q));
            auto m = delta_triple(LinkDesc::montesinos236(q));
            CHECK(t.delta == m.delta);
            CHECK(*t.dbar == *m.dbar);
            CHECK(*t.dunder == *m.dunder);
        }
}

TEST_CASE("T(2,q) goes through the two-bridge formula")
{
    for (std::int64_t q = 3; q <= 31; q += 2) {
        auto t = delta_triple(LinkDesc::torus(2, q));
        auto k = delta_triple(LinkDesc::two_bridge(q, 1));
        CHECK(t.delta == k.delta);
        CHECK(t.delta == make_rat(q - 1, 16));
    }
}

TEST_CASE("Unsupported families")
{
    CHECK_THROWS_AS(delta_triple(LinkDesc::torus(4, 5)), UnsupportedError);
    CHECK_THROWS_AS(delta_triple(LinkDesc::seifert({{-1, 1}, {0, -1}})), UnsupportedError);
    try {
        delta_triple(LinkDesc::torus(3, 4));
        FAIL("expected an unsupported error");
    } catch (const UnsupportedError& e) {
        CHECK(std::string(e.what()).find("requires gauge theory") != std::string::npos);
    }
}

TEST_CASE("Mirror and connected sum identities")
{
    for (const auto& l : supported_knots()) {
        auto t = delta_triple(l);
        auto m = delta_triple(LinkDesc::mirror(l));
        CHECK(m.delta == -t.delta);
        CHECK(*t.dunder == -*m.dbar);
        CHECK(*t.dbar == -*m.dunder);
        CHECK(*t.dunder <= t.delta);
        CHECK(t.delta <= *t.dbar);
        auto s = delta_triple(LinkDesc::sum({l, LinkDesc::mirror(l)}));
        CHECK(s.delta == 0);
        CHECK(denominator_ok(t.delta));
        CHECK(denominator_ok(*t.dbar));
        CHECK(denominator_ok(*t.dunder));
    }
}

TEST_CASE("Connected sums refuse dbar and dunder outside the spherical case")
{
    auto a = delta_triple(LinkDesc::sum({LinkDesc::two_bridge(3, 1), LinkDesc::two_bridge(5, 2)}));
    REQUIRE(a.dbar.has_value());
    CHECK(*a.dbar == a.delta);
    CHECK(a.delta == delta_triple(LinkDesc::two_bridge(3, 1)).delta + delta_triple(LinkDesc::two_bridge(5, 2)).delta);

    auto b = delta_triple(LinkDesc::sum({LinkDesc::montesinos236(11), LinkDesc::two_bridge(3, 1)}));
    CHECK(b.delta == make_rat(5, 8));
    CHECK_FALSE(b.dbar.has_value());
    CHECK_FALSE(b.dunder.has_value());
    CHECK(delta_to_json(b)["dbar"].is_null());
}

TEST_CASE("Spherical delta")
{
    CHECK(spherical_delta({sphere_s0(Group::Z4), 0, make_rat(0)}) == 0);
    CHECK(spherical_delta({sphere_s0(Group::Z4), 0, make_rat(-1, 4)}) == make_rat(1, 8));
    CHECK(spherical_delta({sphere_s0(Group::Z2), 2, make_rat(1, 2)}) == make_rat(-5, 4));
    CHECK_THROWS_AS(spherical_delta({g_tilde(), 0, make_rat(0)}), ValidationError);
}

TEST_CASE("Kappa checks")
{
    auto u = kappa_checks(LinkDesc::unknot(), {make_rat(0)}, {make_rat(0)});
    CHECK(u.holds());

    auto k = kappa_checks(LinkDesc::two_bridge(3, 1), {make_rat(1, 8)}, {make_rat(-1, 8)});
    CHECK(k.congruence_holds);
    CHECK(k.mirror_sum_holds);
    CHECK(k.mirror_sum == 0);

    auto bad = kappa_checks(LinkDesc::two_bridge(3, 1), {make_rat(1, 2)}, {make_rat(-1, 8)});
    CHECK_FALSE(bad.congruence_holds);
    CHECK(bad.congruence_residue == make_rat(3, 4));
    CHECK_FALSE(bad.holds());

    auto neg = kappa_checks(LinkDesc::unknot(), {make_rat(-1)}, {make_rat(0)});
    CHECK(neg.congruence_holds);
    CHECK_FALSE(neg.mirror_sum_holds);
}
