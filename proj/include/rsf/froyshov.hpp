#pragma once

#include "rsf/cwengine.hpp"
#include "rsf/links.hpp"
#include "rsf/rat.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rsf {

enum class Provenance { FamilyFormula, Table, Spherical, Derived };

std::string provenance_name(Provenance p);

// The real Froyshov invariants of a link. dbar and dunder are absent for
// connected sums whose summands are not all spherical.
struct DeltaTriple {
    Rat delta;
    std::optional<Rat> dbar;
    std::optional<Rat> dunder;
    Provenance provenance = Provenance::FamilyFormula;
    // The local class of the branched cover is that of a sphere, so all three
    // values coincide and add under connected sum.
    bool spherical = false;
};

// (dbar, delta, dunder) for M(2,3,n) with n = 12k + r, r in {-1, -5, 1, 5}.
DeltaTriple montesinos_table(std::int64_t n);

// Unknot, TwoBridge, odd Torus (and T(2,q) as a two-bridge knot),
// Montesinos236, ConnectedSum and Mirror. Other descriptors throw
// UnsupportedError.
DeltaTriple delta_triple(const LinkDesc& l);

// -mubar(Sigma(2,p,q))/2 for odd coprime p, q.
Rat torus_delta_from_mubar(std::int64_t p, std::int64_t q);

// -m/2 - n/2 for a class (S0, m, n).
Rat spherical_delta(const SpectrumClass& s);

enum class KappaSource { UserSupplied, Derived };

struct KappaValue {
    Rat kappa;
    KappaSource source = KappaSource::UserSupplied;
};

struct KappaReport {
    bool congruence_holds = false;   // 2 kappa = -sigma/8 mod 2
    Rat congruence_residue;          // 2 kappa + sigma/8 reduced to [0, 2)
    bool mirror_sum_holds = false;   // kappa + kappa(mirror) >= 0
    Rat mirror_sum;
    bool holds() const { return congruence_holds && mirror_sum_holds; }
};

KappaReport kappa_checks(const LinkDesc& l, const KappaValue& k, const KappaValue& k_mirror);

nlohmann::json delta_to_json(const DeltaTriple& t);

}  // namespace rsf
