#pragma once

#include "rsf/forms.hpp"
#include "rsf/rat.hpp"

#include "json.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rsf {

// Multiplicities of a Seifert fibered integral homology sphere Sigma(a_1,...,a_n).
struct SeifertData {
    std::vector<std::int64_t> multiplicities;
};

void validate(const SeifertData& s);

// Star-shaped plumbing tree; vertex 0 is the central vertex when present.
struct PlumbingGraph {
    std::vector<std::int64_t> weights;
    std::vector<std::pair<int, int>> edges;

    IntSymForm intersection_form() const;
};

// Unnormalized Seifert invariants (a_i, b_i) with 0 < b_i < a_i and central
// weight e0 such that e0 + sum b_i/a_i = -1/prod(a_i).
struct SeifertInvariants {
    std::int64_t e0 = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> legs;
};

SeifertInvariants seifert_invariants(const SeifertData& s);

// Negative definite plumbing from negative continued fractions of a_i/b_i.
PlumbingGraph canonical_plumbing(const SeifertData& s);

// The unique 0/1 characteristic vector of a unimodular plumbing form.
std::vector<std::int64_t> wu_class(const PlumbingGraph& g);

// (signature - w.w)/8 for the canonical plumbing.
Rat mubar(const SeifertData& s);

// a/b = c_1 - 1/(c_2 - 1/(...)) with all c_j >= 2.
std::vector<std::int64_t> negative_continued_fraction(std::int64_t a, std::int64_t b);

SeifertData seifert_from_json(const nlohmann::json& j);
nlohmann::json plumbing_to_json(const PlumbingGraph& g);

}  // namespace rsf
