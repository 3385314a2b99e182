#include "rsf/plumbing.hpp"

#include "rsf/errors.hpp"

#include <numeric>
#include <string>

namespace rsf {

void validate(const SeifertData& s)
{
    const auto& a = s.multiplicities;
    for (auto x : a)
        if (x < 1) throw ValidationError("seifert data: multiplicities must be >= 1");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (std::gcd(a[i], a[j]) != 1)
                throw ValidationError("seifert data: " + std::to_string(a[i]) + " and "
                                      + std::to_string(a[j]) + " are not coprime");
}

IntSymForm PlumbingGraph::intersection_form() const
{
    const std::size_t n = weights.size();
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = weights[i];
    for (auto [u, v] : edges) {
        m[u][v] += 1;
        m[v][u] += 1;
    }
    return IntSymForm(std::move(m));
}

std::vector<std::int64_t> negative_continued_fraction(std::int64_t a, std::int64_t b)
{
    if (a <= b || b <= 0) throw ValidationError("negative continued fraction: need a > b > 0");
    std::vector<std::int64_t> out;
    while (b != 0) {
        std::int64_t c = (a + b - 1) / b;  // ceiling
        out.push_back(c);
        std::int64_t r = c * b - a;        // a/b = c - r/b
        a = b;
        b = r;
    }
    return out;
}

SeifertInvariants seifert_invariants(const SeifertData& s)
{
    validate(s);
    std::vector<std::int64_t> a;
    for (auto x : s.multiplicities)
        if (x > 1) a.push_back(x);
    SeifertInvariants out;
    if (a.empty()) return out;

    Int total = 1;
    for (auto x : a) total *= static_cast<long>(x);
    // Multiply e0 + sum b_i/a_i = -1/A by A and reduce mod a_i:
    // b_i (A/a_i) = -1 mod a_i.
    Int acc = -1;
    for (auto ai : a) {
        Int cofactor = total / static_cast<long>(ai);
        Int inv;
        Int mod(static_cast<long>(ai));
        if (mpz_invert(inv.get_mpz_t(), Int(cofactor % mod).get_mpz_t(), mod.get_mpz_t()) == 0)
            throw ValidationError("seifert data: no integral solution (multiplicities not coprime)");
        Int b = (-inv) % mod;
        if (b < 0) b += mod;
        out.legs.push_back({ai, b.get_si()});
        acc -= b * cofactor;
    }
    if (acc % total != 0) throw InternalError("seifert invariants: central weight is not integral");
    out.e0 = Int(acc / total).get_si();
    return out;
}

PlumbingGraph canonical_plumbing(const SeifertData& s)
{
    SeifertInvariants inv = seifert_invariants(s);
    PlumbingGraph g;
    if (inv.legs.empty()) return g;
    g.weights.push_back(inv.e0);
    for (auto [a, b] : inv.legs) {
        int prev = 0;
        for (auto c : negative_continued_fraction(a, b)) {
            int v = static_cast<int>(g.weights.size());
            g.weights.push_back(-c);
            g.edges.push_back({prev, v});
            prev = v;
        }
    }
    return g;
}

std::vector<std::int64_t> wu_class(const PlumbingGraph& g)
{
    auto sols = characteristic_solutions_mod2(g.intersection_form());
    if (sols.size() != 1)
        throw InternalError("wu class: expected a unique 0/1 characteristic vector, found "
                            + std::to_string(sols.size()));
    return std::vector<std::int64_t>(sols[0].begin(), sols[0].end());
}

Rat mubar(const SeifertData& s)
{
    PlumbingGraph g = canonical_plumbing(s);
    IntSymForm m = g.intersection_form();
    if (abs(determinant(m)) != 1)
        throw InternalError("mubar: plumbing is not unimodular");
    auto w = wu_class(g);
    Int num = Int(signature(m)) - m.pair(w, w);
    if (num % 8 != 0) throw InternalError("mubar: signature - w.w is not divisible by 8");
    return Rat(num / 8);
}

SeifertData seifert_from_json(const nlohmann::json& j)
{
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("brieskorn")) throw ValidationError("seifert data: expected {\"brieskorn\":[...]}");
        arr = &j["brieskorn"];
    }
    if (!arr->is_array()) throw ValidationError("seifert data: expected an array of multiplicities");
    SeifertData s;
    for (const auto& x : *arr) {
        if (!x.is_number_integer()) throw ValidationError("seifert data: multiplicities must be integers");
        s.multiplicities.push_back(x.get<std::int64_t>());
    }
    validate(s);
    return s;
}

nlohmann::json plumbing_to_json(const PlumbingGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"weights", g.weights}, {"edges", edges}};
}

}  // namespace rsf
