#pragma once

#include "rsf/froyshov.hpp"
#include "rsf/rat.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsf {

// A surface cobordism S in X from L to L'. X is a cobordism from S^3 to S^3
// with b_1(X) = 0; e is the normal Euler number S.S.
struct SurfaceCobordismData {
    std::int64_t bplus_X = 0;
    std::int64_t sigma_X = 0;
    std::optional<std::int64_t> b2_X;  // derived as 2 b+ - sigma when absent
    std::int64_t b1_S = 0;
    std::optional<std::int64_t> genus_S;  // used only by the genus form of the hypothesis
    std::int64_t e = 0;
    std::int64_t sigma_L = 0;
    std::int64_t sigma_Lp = 0;
    std::optional<Rat> c1_sq;
    bool spin = false;
};

// Rejects negative counts and a b2 that does not match b+ and sigma.
void validate(const SurfaceCobordismData& d);

struct BranchedCoverHomology {
    std::int64_t sigma = 0;
    std::int64_t b2 = 0;
    Rat bplus;
    std::int64_t b1 = 0;
    std::int64_t b3 = 0;
};

// Homology of the double branched cover of X along S. Throws
// ValidationError when b+ or b- comes out negative or non-integral.
BranchedCoverHomology branched_homology(const SurfaceCobordismData& d);

// Pure formulas, exposed separately so they can be checked against each other.
Rat cover_signature(const SurfaceCobordismData& d);
std::int64_t cover_b2(const SurfaceCobordismData& d);
Rat cover_bplus(const SurfaceCobordismData& d);

// b+(X) + b1(S)/2 - e/4 - sigma(L)/2 + sigma(L')/2.
Rat hypothesis_value(const SurfaceCobordismData& d);
// The same with g(S) in place of b1(S)/2; requires genus_S.
Rat hypothesis_value_genus(const SurfaceCobordismData& d);

// (c1^2 - 2 sigma(X) - e/2 - sigma(L) + sigma(L'))/16.
Rat ineq1_correction(const SurfaceCobordismData& d);
// (-2 sigma(X) + e/2 + sigma(L) - sigma(L'))/16.
Rat ineq2_correction(const SurfaceCobordismData& d);

struct InequalityCheck {
    std::string name;
    Rat lhs;
    Rat rhs;
    bool satisfied = false;
};

struct CobordismReport {
    Rat hypothesis;
    bool hypothesis_holds = false;
    bool hypothesis_consistent = true;  // the hypothesis value is never negative
    std::vector<InequalityCheck> checks;
    bool satisfied = true;              // every evaluated check holds
    std::vector<std::string> notes;
};

// The real Froyshov inequality for delta. A violated check under a satisfied
// hypothesis certifies that the cobordism and spin-c data cannot exist.
CobordismReport check_ineq1(const SurfaceCobordismData& d, const Rat& delta_L, const Rat& delta_Lp);

enum class HypothesisForm { HalfB1, Genus };

// Hypothesis 0: dbar and dunder inequalities. Hypothesis 1: dunder(L) against
// dbar(L'). Any other value is reported as inapplicable.
CobordismReport check_ineq2_and_theoremB(const SurfaceCobordismData& d, const DeltaTriple& L,
                                         const DeltaTriple& Lp, HypothesisForm form = HypothesisForm::HalfB1);

struct ClosedReport {
    bool applicable = false;  // b+ = b+ of the invariant part
    Rat value;                // c1^2 - sigma
    bool fires = false;       // value > 0 with the hypothesis met
};

ClosedReport check_closed(const Rat& c1_sq, std::int64_t sigma_W, std::int64_t bplus, std::int64_t bplus_inv);

struct UnorientedBound {
    Rat classical;          // |sigma - e/2|
    Rat bound;              // certified lower bound for b1(S)
    bool hypotheses_met = false;
    bool strengthened = false;  // the bound -sigma + e/2 + 1 is active
    std::vector<std::string> failed_hypotheses;
};

UnorientedBound unoriented_bound(std::int64_t sigma_K, std::int64_t e, const Rat& delta_K, const Int& det_K,
                                 bool mo_delta_zero);

// Raw blow-up data realizing a positive crossing change from K to K'.
// sigma(K) - sigma(K') = 2: annulus in I x S^3 # -CP^2 from K to K'.
// sigma(K) = sigma(K'): annulus in the orientation reversal, read from K' to K.
SurfaceCobordismData crossing_change_data(std::int64_t sigma_K, std::int64_t sigma_Kp);

SurfaceCobordismData cobordism_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const CobordismReport& r);
nlohmann::json closed_to_json(const ClosedReport& r);
nlohmann::json unoriented_to_json(const UnorientedBound& b);
nlohmann::json homology_to_json(const BranchedCoverHomology& h);

}  // namespace rsf
