#include "doctest.h"

#include "rsf/errors.hpp"
#include "rsf/links.hpp"
#include "rsf/plumbing.hpp"

#include <numeric>

using namespace rsf;

namespace {

bool congruence_holds(const IntSymForm& m, const std::vector<std::int64_t>& w)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::int64_t row = 0;
        for (std::size_t j = 0; j < m.size(); ++j) row += m(i, j) * w[j];
        if ((row - m(i, i)) % 2 != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("negative continued fractions")
{
    CHECK(negative_continued_fraction(13, 2) == std::vector<std::int64_t>{7, 2});
    CHECK(negative_continued_fraction(5, 4) == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(negative_continued_fraction(11, 9) == std::vector<std::int64_t>{2, 2, 2, 2, 3});
    CHECK(negative_continued_fraction(3, 1) == std::vector<std::int64_t>{3});
}

TEST_CASE("Sigma(2,3,5) bounds the negative E8 plumbing")
{
    PlumbingGraph g = canonical_plumbing({{2, 3, 5}});
    IntSymForm m = g.intersection_form();
    CHECK(m.size() == 8);
    CHECK(signature(m) == -8);
    CHECK(determinant(m) == 1);
    for (auto w : g.weights) CHECK(w == -2);
    // An even unimodular negative definite lattice of rank 8 is -E8.
    CHECK(wu_class(g) == std::vector<std::int64_t>(8, 0));
    CHECK(mubar({{2, 3, 5}}) == -1);
}

TEST_CASE("Sigma(1) is the empty plumbing")
{
    PlumbingGraph g = canonical_plumbing({{1}});
    CHECK(g.weights.empty());
    CHECK(g.intersection_form().size() == 0);
    CHECK(mubar({{1}}) == 0);
}

TEST_CASE("Sigma(2,3,7)")
{
    SeifertInvariants inv = seifert_invariants({{2, 3, 7}});
    CHECK(inv.e0 == -1);
    PlumbingGraph g = canonical_plumbing({{2, 3, 7}});
    CHECK(g.weights == std::vector<std::int64_t>{-1, -2, -3, -7});
    IntSymForm m = g.intersection_form();
    CHECK(positive_index(m) == 0);
    CHECK(nullity(m) == 0);
    CHECK(abs(determinant(m)) == 1);
    auto w = wu_class(g);
    CHECK(congruence_holds(m, w));
    CHECK(w == std::vector<std::int64_t>{0, 1, 1, 1});
    // sigma = -4, w.w = -2 - 3 - 7 = -12.
    CHECK(mubar({{2, 3, 7}}) == 1);
}

TEST_CASE("Sigma(2,3,13) and Sigma(2,3,11)")
{
    // Graph (-1; -2, -3, -7 -2), w supported on the -3 and the final -2 vertex.
    CHECK(canonical_plumbing({{2, 3, 13}}).weights == std::vector<std::int64_t>{-1, -2, -3, -7, -2});
    CHECK(mubar({{2, 3, 13}}) == 0);
    CHECK(mubar({{2, 3, 11}}) == 0);
}

TEST_CASE("single vertex of weight -1")
{
    PlumbingGraph g{{-1}, {}};
    CHECK(wu_class(g) == std::vector<std::int64_t>{1});
}

TEST_CASE("canonical plumbings are negative definite and unimodular")
{
    int count = 0;
    for (std::int64_t a = 2; a <= 10; ++a)
        for (std::int64_t b = a + 1; a * b <= 500; ++b)
            for (std::int64_t c = b + 1; a * b * c <= 1000; ++c) {
                if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                SeifertData s{{a, b, c}};
                PlumbingGraph g = canonical_plumbing(s);
                IntSymForm m = g.intersection_form();
                CHECK(inertia(m).negative == static_cast<int>(m.size()));
                CHECK(abs(determinant(m)) == 1);
                auto w = wu_class(g);
                CHECK(congruence_holds(m, w));
                CHECK((Int(signature(m)) - m.pair(w, w)) % 8 == 0);
                ++count;
            }
    CHECK(count > 50);
}

TEST_CASE("Wu class is unique by exhaustion for small graphs")
{
    for (std::int64_t r : {5, 7, 11, 13, 17, 19}) {
        PlumbingGraph g = canonical_plumbing({{2, 3, r}});
        IntSymForm m = g.intersection_form();
        const std::size_t n = m.size();
        REQUIRE(n <= 12);
        int solutions = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::int64_t> w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1u;
            if (congruence_holds(m, w)) {
                ++solutions;
                CHECK(w == wu_class(g));
            }
        }
        CHECK(solutions == 1);
    }
}

TEST_CASE("mubar reduces to the Rokhlin invariant sigma(T(p,q))/8 mod 2")
{
    for (std::int64_t p = 3; p <= 9; p += 2)
        for (std::int64_t q = p + 2; q <= 45; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            const std::int64_t sigma = link_signature(LinkDesc::torus(p, q));
            REQUIRE(sigma % 8 == 0);
            Int diff = mubar({{2, p, q}}).get_num() - sigma / 8;
            CHECK_MESSAGE(diff % 2 == 0, "Sigma(2," << p << "," << q << ")");
        }
}

TEST_CASE("invalid Seifert data")
{
    CHECK_THROWS_AS(canonical_plumbing({{2, 4, 5}}), ValidationError);
    CHECK_THROWS_AS(seifert_from_json(nlohmann::json::parse(R"({"brieskorn":[2,"x"]})")), ValidationError);
    CHECK(seifert_from_json(nlohmann::json::parse(R"({"brieskorn":[2,3,7]})")).multiplicities.size() == 3);
}
