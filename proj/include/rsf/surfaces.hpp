#pragma once

#include "rsf/links.hpp"
#include "rsf/rat.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rsf {

struct PairWindow {
    std::int64_t e_min = -40;
    std::int64_t e_max = 40;
    std::int64_t h_min = 1;
    std::int64_t h_max = 12;
};

enum class PairStatus { ObstructedClassical, ObstructedRealFroyshov, Unobstructed };

std::string status_name(PairStatus s);

struct ClassifiedPair {
    std::int64_t e = 0;
    std::int64_t h = 0;
    PairStatus status = PairStatus::Unobstructed;
    std::string reason;
};

struct PairRegion {
    PairWindow window;
    int sign_convention = 1;
    std::int64_t sigma = 0;
    Int determinant;
    Rat delta;
    bool mo_delta_zero = false;
    bool hypotheses_met = false;
    std::vector<std::string> failed_hypotheses;
    std::vector<ClassifiedPair> pairs;  // e ascending, then h ascending

    std::set<std::pair<std::int64_t, std::int64_t>> with_status(PairStatus s) const;
};

// Knots for which the Manolescu-Owen invariant is asserted to vanish.
bool mo_delta_zero_allowlisted(const LinkDesc& k);

// Classifies every (e, h) in the window for surfaces in D^4 bounded by K.
// When mo_delta_zero is absent the allowlist decides. sign_convention = -1
// replaces e by -e before the bounds are applied.
PairRegion classify_pairs(const LinkDesc& k, const PairWindow& window, std::optional<bool> mo_delta_zero = std::nullopt,
                          int sign_convention = 1);

// Pairs (-2 - 16n + 2s, 1 + m + 2l) with |s| = m, m, l >= 0, inside the window.
std::set<std::pair<std::int64_t, std::int64_t>> corollary_family(std::int64_t n, const PairWindow& window);

// The same classification from precomputed invariants of K.
PairRegion classify_pairs_from(std::int64_t sigma, const Int& determinant, const Rat& delta, bool mo_delta_zero,
                               const PairWindow& window, int sign_convention = 1);

// One row per h from h_max down: 'o' unobstructed, 'x' obstructed by the
// real Froyshov bound, '.' obstructed classically.
std::string render_grid(const PairRegion& r);

nlohmann::json region_to_json(const PairRegion& r);

}  // namespace rsf
