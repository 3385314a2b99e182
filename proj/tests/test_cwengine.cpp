#include "doctest.h"

#include "rsf/cwengine.hpp"
#include "rsf/errors.hpp"

#include <map>
#include <utility>

using namespace rsf;
using rsf::f2::BitVec;

namespace {

// Independent model: cellular homology of the orbit space (EG x X)/G relative
// to EG x basepoint, with EG the standard lens-space cell structure truncated
// above degree N + 1. Over F2 its Betti numbers equal the Borel cohomology
// dimensions, and the rank of the map induced by the inclusion of the fixed
// subcomplex equals the rank of the restriction.
struct OrbitModel {
    const GCWComplex& x;
    int n_max;
    std::vector<std::map<std::pair<int, int>, int>> index;  // by degree
    std::vector<std::vector<std::pair<int, int>>> cells;

    OrbitModel(const GCWComplex& cx, int truncation, bool fixed_only) : x(cx), n_max(truncation)
    {
        index.resize(n_max + 2);
        cells.resize(n_max + 2);
        for (int c = 0; c < static_cast<int>(x.cell_count()); ++c) {
            if (c == x.basepoint() || (fixed_only && !x.h_fixed(c))) continue;
            for (int i = 0; i + x.cell_dim(c) <= n_max + 1; ++i) {
                int deg = i + x.cell_dim(c);
                index[deg][{i, c}] = static_cast<int>(cells[deg].size());
                cells[deg].push_back({i, c});
            }
        }
    }

    int inverse(int c) const
    {
        int y = c;
        for (int k = 1; k < group_order(x.group()); ++k) y = x.act(y);
        return y;
    }

    // Boundary of the orbit cell e_i x c in degree deg, as a vector in degree deg - 1.
    BitVec boundary(int deg, std::pair<int, int> cell) const
    {
        auto [i, c] = cell;
        BitVec v(cells[deg - 1].size());
        auto toggle = [&](int j, int d) {
            if (d == x.basepoint()) return;
            auto it = index[deg - 1].find({j, d});
            if (it != index[deg - 1].end()) v.flip(it->second);
        };
        if (i >= 1) {
            int copies = 2;
            if (x.group() == Group::Z4 && i % 2 == 0) copies = 4;
            int y = c;
            for (int k = 0; k < copies; ++k) {
                toggle(i - 1, y);
                y = inverse(y);
            }
        }
        for (int b : x.boundary(c)) toggle(i, b);
        return v;
    }

    std::vector<BitVec> boundary_images(int deg) const
    {
        std::vector<BitVec> out;
        for (auto cell : cells[deg]) out.push_back(boundary(deg, cell));
        return out;
    }

    int betti(int n) const
    {
        std::size_t r_in = n == 0 ? 0 : f2::rank(boundary_images(n), cells[n - 1].size());
        std::size_t r_out = f2::rank(boundary_images(n + 1), cells[n].size());
        return static_cast<int>(cells[n].size() - r_in - r_out);
    }
};

// Rank of H_n(A) -> H_n(X) for the fixed subcomplex A.
int inclusion_rank(const OrbitModel& whole, const OrbitModel& sub, int n)
{
    auto cycles = n == 0 ? std::vector<BitVec>{} : f2::kernel(sub.boundary_images(n), sub.cells[n - 1].size());
    if (n == 0)
        for (std::size_t k = 0; k < sub.cells[0].size(); ++k) {
            BitVec e(sub.cells[0].size());
            e.set(k);
            cycles.push_back(e);
        }
    std::vector<BitVec> boundaries;
    for (const auto& v : whole.boundary_images(n + 1)) {
        BitVec w(whole.cells[n].size());
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v.get(k)) w.set(k);
        boundaries.push_back(w);
    }
    std::size_t rb = f2::rank(boundaries, whole.cells[n].size());
    for (const auto& z : cycles) {
        BitVec w(whole.cells[n].size());
        for (std::size_t k = 0; k < z.size(); ++k)
            if (z.get(k)) w.set(whole.index[n].at(sub.cells[n][k]));
        boundaries.push_back(w);
    }
    return static_cast<int>(f2::rank(boundaries, whole.cells[n].size()) - rb);
}

void check_against_oracle(const GCWComplex& x, int truncation)
{
    auto bc = borel_cohomology(x, truncation);
    OrbitModel whole(x, truncation, false);
    OrbitModel fixed(x, truncation, true);
    for (int n = 0; n <= truncation; ++n) {
        CHECK(bc.dims[n] == whole.betti(n));
        CHECK(bc.fixed_dims[n] == fixed.betti(n));
        CHECK(static_cast<int>(map_rank(bc.restriction[n], bc.fixed_dims[n])) == inclusion_rank(whole, fixed, n));
    }
}

// Oracle d: first degree where the inclusion of the fixed part is nonzero.
int oracle_d(const GCWComplex& x, int truncation)
{
    OrbitModel whole(x, truncation, false);
    OrbitModel fixed(x, truncation, true);
    for (int n = 0; n <= truncation; ++n)
        if (inclusion_rank(whole, fixed, n) > 0) return n;
    return -1;
}

// Oracle (dbar, dunder) from the parity of degrees where the inclusion of
// the fixed part is nonzero.
std::pair<int, int> oracle_dbar_dunder(const GCWComplex& x, int truncation)
{
    OrbitModel whole(x, truncation, false);
    OrbitModel fixed(x, truncation, true);
    int s = x.level() % 2;
    int even = -1, odd = -1;
    for (int n = 0; n <= truncation; ++n) {
        if (inclusion_rank(whole, fixed, n) == 0) continue;
        if (n % 2 == s && even < 0) even = n;
        if (n % 2 != s && odd < 0) odd = n;
    }
    return {even, odd - 1};
}

std::vector<GCWComplex> z2_zoo()
{
    return {sphere_s0(Group::Z2),
            suspend(sphere_s0(Group::Z2), Rep::R, 1),
            suspend(sphere_s0(Group::Z2), Rep::Rtilde, 1),
            suspend(sphere_s0(Group::Z2), Rep::Rtilde, 2),
            unreduced_suspension(Group::Z2, {2}),
            unreduced_suspension(Group::Z2, {2, 2}),
            unreduced_suspension(Group::Z2, {1, 1, 2}),
            g_tilde().restrict_to_h()};
}

std::vector<GCWComplex> z4_zoo()
{
    return {sphere_s0(Group::Z4),
            g_tilde(),
            unreduced_suspension(Group::Z4, {2}),
            unreduced_suspension(Group::Z4, {4, 4}),
            unreduced_suspension(Group::Z4, {2, 4}),
            suspend(sphere_s0(Group::Z4), Rep::Rtilde, 1),
            suspend(sphere_s0(Group::Z4), Rep::C, 1),
            suspend(g_tilde(), Rep::Rtilde, 1)};
}

GCWComplex free_circle_plus_base()
{
    return GCWComplex(Group::Z2, 0, "b",
                      {{"b", 0, {}}, {"v0", 0, {}}, {"v1", 0, {}}, {"e0", 1, {"v0", "v1"}}, {"e1", 1, {"v0", "v1"}}},
                      {{"v0", "v1"}, {"v1", "v0"}, {"e0", "e1"}, {"e1", "e0"}}, false);
}

}  // namespace

TEST_CASE("Borel cohomology of S0 has one class per degree")
{
    for (Group g : {Group::Z2, Group::Z4}) {
        auto bc = borel_cohomology(sphere_s0(g), 8);
        REQUIRE(bc.dims.size() == 9);
        for (int n = 0; n <= 8; ++n) CHECK(bc.dims[n] == 1);
        for (int n = 0; n + bc.shift <= 8; ++n) CHECK(map_rank(bc.periodicity[n], 1) == 1);
    }
}

TEST_CASE("Free circle plus a base point has the cohomology of RP1")
{
    auto x = free_circle_plus_base();
    CHECK_FALSE(x.sphere_type());
    auto bc = borel_cohomology(x, 8);
    std::vector<int> expected{1, 1, 0, 0, 0, 0, 0, 0, 0};
    CHECK(bc.dims == expected);
    CHECK_THROWS_AS(d_invariant(x), ValidationError);
}

TEST_CASE("Borel cohomology agrees with the orbit-space oracle")
{
    for (const auto& x : z2_zoo()) check_against_oracle(x, default_truncation(x));
    for (const auto& x : z4_zoo()) check_against_oracle(x, default_truncation(x));
    check_against_oracle(free_circle_plus_base(), 8);
}

TEST_CASE("d invariant examples")
{
    CHECK(d_invariant(sphere_s0(Group::Z2)) == 0);
    CHECK(d_invariant(suspend(sphere_s0(Group::Z2), Rep::Rtilde, 1)) == 1);
    CHECK(d_invariant(unreduced_suspension(Group::Z2, {2})) == 1);
    for (const auto& x : z2_zoo()) CHECK(d_invariant(x) == oracle_d(x, default_truncation(x)));
}

TEST_CASE("dbar and dunder examples")
{
    CHECK(dbar_dunder(sphere_s0(Group::Z4)) == std::pair<int, int>{0, 0});
    CHECK(dbar_dunder(g_tilde()) == std::pair<int, int>{2, 0});
    CHECK(invariants(g_tilde()).d == 1);
    CHECK(dbar_dunder(suspend(sphere_s0(Group::Z4), Rep::C, 1)) == std::pair<int, int>{2, 2});
    CHECK(dbar_dunder(suspend(g_tilde(), Rep::Rtilde, 2)) == std::pair<int, int>{4, 2});
    for (const auto& x : z4_zoo()) {
        auto [dbar, dunder] = dbar_dunder(x);
        CHECK(std::pair<int, int>{dbar, dunder} == oracle_dbar_dunder(x, default_truncation(x)));
        CHECK(dunder <= dbar);
        CHECK((dbar - x.level()) % 2 == 0);
        CHECK((dunder - x.level()) % 2 == 0);
    }
}

TEST_CASE("Representation spheres and levels")
{
    CHECK(representation_sphere(Group::Z2, Rep::Rtilde).level() == 0);
    CHECK(representation_sphere(Group::Z4, Rep::Rtilde).level() == 1);
    CHECK(representation_sphere(Group::Z4, Rep::C).level() == 0);
    CHECK(representation_sphere(Group::Z4, Rep::C).dim() == 2);
    CHECK(g_tilde().level() == 0);
    CHECK_THROWS_AS(representation_sphere(Group::Z2, Rep::C), ValidationError);
    CHECK_THROWS_AS(suspend(sphere_s0(Group::Z2), Rep::Rtilde, -1), ValidationError);
}

TEST_CASE("Stabilization under suspension")
{
    for (const auto& x : z2_zoo()) {
        int d = d_invariant(x);
        for (int k = 1; k <= 2; ++k) {
            CHECK(d_invariant(suspend(x, Rep::Rtilde, k)) == d + k);
            CHECK(d_invariant(suspend(x, Rep::R, k)) == d + k);
        }
    }
    for (const auto& x : z4_zoo()) {
        auto [dbar, dunder] = dbar_dunder(x);
        auto r = dbar_dunder(suspend(x, Rep::Rtilde, 1));
        CHECK(r == std::pair<int, int>{dbar + 1, dunder + 1});
        if (x.dim() <= 1) {
            auto c = dbar_dunder(suspend(x, Rep::C, 1));
            CHECK(c == std::pair<int, int>{dbar + 2, dunder + 2});
        }
    }
}

TEST_CASE("Smash product")
{
    auto s0 = sphere_s0(Group::Z4);
    auto ss = smash(s0, s0);
    CHECK(ss.cell_count() == 2);
    CHECK(dbar_dunder(ss) == std::pair<int, int>{0, 0});

    for (const auto& x : z4_zoo()) {
        auto y = smash(x, s0);
        CHECK(y.cell_count() == x.cell_count());
        CHECK(y.level() == x.level());
        auto a = invariants(x);
        auto b = invariants(y);
        CHECK(a.d == b.d);
        CHECK(a.dbar == b.dbar);
        CHECK(a.dunder == b.dunder);
    }

    auto gg = smash(g_tilde(), g_tilde());
    CHECK(gg.level() == 0);
    auto inv = invariants(gg);
    CHECK(*inv.dunder >= 0);
    CHECK(*inv.dunder <= *inv.dbar);
    CHECK(*inv.d >= 2);
    auto oracle = oracle_dbar_dunder(gg, default_truncation(gg));
    CHECK(std::pair<int, int>{*inv.dbar, *inv.dunder} == oracle);

    CHECK_THROWS_AS(smash(sphere_s0(Group::Z2), s0), ValidationError);
}

TEST_CASE("Smash superadditivity of d")
{
    auto zoo = z2_zoo();
    for (std::size_t i = 0; i < zoo.size(); ++i)
        for (std::size_t j = i; j < zoo.size(); ++j) {
            if (zoo[i].dim() + zoo[j].dim() > 3) continue;
            auto xy = smash(zoo[i], zoo[j]);
            CHECK(d_invariant(xy) >= d_invariant(zoo[i]) + d_invariant(zoo[j]));
        }
}

TEST_CASE("Truncation stability")
{
    for (const auto& x : z2_zoo()) {
        int n = default_truncation(x);
        int d = d_invariant(x, n);
        CHECK(d_invariant(x, n + 2) == d);
        CHECK(d_invariant(x, n + 4) == d);
    }
    for (const auto& x : z4_zoo()) {
        int n = default_truncation(x);
        auto r = dbar_dunder(x, n);
        CHECK(dbar_dunder(x, n + 2) == r);
        CHECK(dbar_dunder(x, n + 4) == r);
    }
}

TEST_CASE("Restriction is an isomorphism above the dimension")
{
    for (const auto& x : z4_zoo()) {
        auto bc = borel_cohomology(x, default_truncation(x));
        for (int n = x.dim() + 1; n <= bc.truncation; ++n) {
            CHECK(bc.dims[n] == bc.fixed_dims[n]);
            CHECK(static_cast<int>(map_rank(bc.restriction[n], bc.fixed_dims[n])) == bc.dims[n]);
        }
    }
}

TEST_CASE("Spectrum classes")
{
    auto s = spectrum_invariants({sphere_s0(Group::Z2), 0, make_rat(0)});
    CHECK(*s.d == 0);

    auto g = spectrum_invariants({g_tilde(), 0, make_rat(1, 4)});
    CHECK(*g.dbar == make_rat(3, 2));
    CHECK(*g.dunder == make_rat(-1, 2));

    auto p = spectrum_invariants({sphere_s0(Group::Z4), 0, make_rat(-1, 4)});
    CHECK(*p.dbar == make_rat(1, 2));
    CHECK(*p.dunder == make_rat(1, 2));

    for (int m = -2; m <= 2; ++m)
        for (int k = -3; k <= 3; ++k) {
            Rat n = make_rat(k, 4);
            auto a = spectrum_invariants({sphere_s0(Group::Z4), m, n});
            auto b = spectrum_invariants({sphere_s0(Group::Z4), -m, -n});
            CHECK(*a.dunder == -*b.dbar);
        }
}

TEST_CASE("Height checks")
{
    SpectrumInvariants z{Group::Z2, make_rat(0), std::nullopt, std::nullopt};
    CHECK(local_map_height_check(z, z, make_rat(0)).holds);

    SpectrumInvariants a{Group::Z4, std::nullopt, make_rat(0), make_rat(0)};
    SpectrumInvariants b{Group::Z4, std::nullopt, make_rat(2), make_rat(2)};
    auto r = local_map_height_check(a, b, make_rat(1));
    CHECK(r.holds);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].lhs == 2);

    SpectrumInvariants c{Group::Z4, std::nullopt, make_rat(0), make_rat(0)};
    auto tb = local_map_height_check(c, c, make_rat(1), HeightMode::TheoremB);
    CHECK_FALSE(tb.holds);
    REQUIRE(tb.checks.size() == 1);
    CHECK(tb.checks[0].lhs == 2);
    CHECK(tb.checks[0].rhs == 0);
}

TEST_CASE("Complex validation names the offending cells")
{
    auto expect_error = [](auto make, const std::string& fragment) {
        try {
            make();
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error([] { return GCWComplex(Group::Z2, 0, "b", {{"b", 0, {}}, {"p", 0, {}}}, {{"b", "p"}, {"p", "b"}}); },
                 "basepoint 'b' is not fixed");
    expect_error([] { return GCWComplex(Group::Z2, 0, "b", {{"b", 0, {}}, {"p", 0, {}}, {"q", 0, {}}}, {{"p", "q"}}); },
                 "not a permutation");
    expect_error([] { return GCWComplex(Group::Z2, 0, "b", {{"b", 0, {}}, {"e", 1, {"x"}}}, {}); }, "'x'");
    expect_error([] { return GCWComplex(Group::Z2, 0, "b", {{"b", 0, {}}, {"e", 2, {"b"}}}, {}); },
                 "cell 'e': boundary cell 'b' has dimension 0");
    expect_error(
        [] {
            return GCWComplex(Group::Z2, 0, "b",
                              {{"b", 0, {}}, {"p", 0, {}}, {"e", 1, {"p", "b"}}, {"f", 2, {"e"}}}, {});
        },
        "boundary of boundary of cell 'f'");
    expect_error([] { return GCWComplex(Group::Z4, 0, "b", {{"b", 0, {}}, {"p", 0, {}}, {"q", 0, {}}},
                                        {{"p", "q"}, {"q", "p"}}); },
                 "S^0");
    expect_error([] { return GCWComplex(Group::Z2, 1, "b", {{"b", 0, {}}, {"p", 0, {}}}, {}); }, "S^1");
    expect_error([] { return GCWComplex(Group::Z2, 0, "b", {{"b", 0, {}}, {"b", 0, {}}}, {}); }, "duplicate");
}

TEST_CASE("Complex JSON round trip")
{
    auto g = g_tilde();
    auto j = complex_to_json(g);
    auto back = complex_from_json(j);
    CHECK(complex_to_json(back) == j);
    CHECK(dbar_dunder(back) == std::pair<int, int>{2, 0});

    auto parsed = complex_from_json(nlohmann::json::parse(R"({"group":"Z4","level":0,"basepoint":"b",
        "cells":[{"id":"b","dim":0},{"id":"s","dim":0},
                 {"id":"e0","dim":1,"bd":["b","s"]},{"id":"e1","dim":1,"bd":["b","s"]},
                 {"id":"e2","dim":1,"bd":["b","s"]},{"id":"e3","dim":1,"bd":["b","s"]}],
        "gen_action":{"e0":"e1","e1":"e2","e2":"e3","e3":"e0"}})"));
    CHECK(dbar_dunder(parsed) == std::pair<int, int>{2, 0});
    CHECK_FALSE(parsed.validation_notes().empty());

    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"group":"Z3","basepoint":"b","cells":[]})")),
                    ValidationError);
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"group":"Z2","cells":[]})")), ValidationError);
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"group":"Z2","basepoint":"b","cells":[{"id":1}]})")),
                    ValidationError);
}
