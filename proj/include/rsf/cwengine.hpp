#pragma once

#include "rsf/f2.hpp"
#include "rsf/rat.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsf {

enum class Group { Z2, Z4 };

int group_order(Group g);
std::string group_name(Group g);

struct CellSpec {
    std::string id;
    int dim = 0;
    std::vector<std::string> boundary;  // multiset; reduced mod 2
};

// Finite pointed G-CW complex over F2 with the action of a fixed generator t.
// H is the subgroup of order 2, generated by t (Z2) or t^2 (Z4).
class GCWComplex {
public:
    // Validates every structural condition and throws ValidationError naming
    // the offending cells. Cells missing from `action` are fixed. With
    // require_sphere false, the fixed subcomplex may have any homology; such a
    // complex supports Borel cohomology but not the invariants.
    GCWComplex(Group group, int level, std::string basepoint, std::vector<CellSpec> cells,
               std::map<std::string, std::string> action, bool require_sphere = true);

    Group group() const { return group_; }
    int level() const { return level_; }
    int dim() const { return dim_; }
    std::size_t cell_count() const { return ids_.size(); }
    int basepoint() const { return base_; }
    // True when the fixed subcomplex has the F2 homology of S^level.
    bool sphere_type() const { return sphere_; }

    const std::string& id(int c) const { return ids_[c]; }
    int cell_dim(int c) const { return dims_[c]; }
    const std::vector<int>& boundary(int c) const { return bd_[c]; }
    int act(int c) const { return act_[c]; }
    int act_h(int c) const;
    bool h_fixed(int c) const { return act_h(c) == c; }
    std::optional<int> find(const std::string& id) const;

    // Notes attached by validation, e.g. which conditions were checked by proxy.
    const std::vector<std::string>& validation_notes() const { return notes_; }

    // The same cells with the action of H only, as a Z2 complex.
    GCWComplex restrict_to_h() const;

    std::vector<CellSpec> cell_specs() const;
    std::map<std::string, std::string> action_map() const;

private:
    void validate(bool require_sphere);

    Group group_;
    int level_;
    int dim_ = 0;
    int base_ = -1;
    bool sphere_ = false;
    std::vector<std::string> ids_;
    std::vector<int> dims_;
    std::vector<std::vector<int>> bd_;
    std::vector<int> act_;
    std::vector<std::string> notes_;
};

GCWComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const GCWComplex& x);

enum class Rep { R, Rtilde, C };

// Smash product with diagonal action; levels add.
GCWComplex smash(const GCWComplex& x, const GCWComplex& y);
// One-point compactification of a single copy of the representation.
GCWComplex representation_sphere(Group g, Rep rep);
// X smashed with count copies of the representation sphere.
GCWComplex suspend(const GCWComplex& x, Rep rep, int count);
int rep_dim(Rep rep);

// Two points, both fixed, one of them the basepoint.
GCWComplex sphere_s0(Group g);
// Unreduced suspension of a G-set given by orbit sizes; basepoint at a cone point.
GCWComplex unreduced_suspension(Group g, const std::vector<int>& orbit_sizes);
// The unreduced suspension of the free Z4 orbit.
GCWComplex g_tilde();

// Reduced Borel cohomology over F2 in degrees 0..N. Linear maps are stored as
// the images of basis vectors, each of length the target dimension.
struct BorelCohomology {
    Group group = Group::Z2;
    int truncation = 0;
    int shift = 1;                                      // degree of W (1) or U (2)
    std::vector<int> dims;                              // dims[n], n = 0..N
    std::vector<std::vector<f2::BitVec>> periodicity;   // H^n -> H^{n+shift}, n + shift <= N
    std::vector<int> fixed_dims;                        // cohomology of X^H
    std::vector<std::vector<f2::BitVec>> restriction;   // H^n(X) -> H^n(X^H)
};

BorelCohomology borel_cohomology(const GCWComplex& x, int truncation);

// Smallest truncation at which the invariants are computed with their
// stability re-checks.
int default_truncation(const GCWComplex& x);

struct Invariants {
    std::optional<int> d;
    std::optional<int> dbar;
    std::optional<int> dunder;
};

// Z2 only. The minimal degree with a nonzero restriction to the fixed set.
int d_invariant(const GCWComplex& x, std::optional<int> truncation = std::nullopt);
// Z4 only. Returns (dbar, dunder) from U-tower survival.
std::pair<int, int> dbar_dunder(const GCWComplex& x, std::optional<int> truncation = std::nullopt);
// d for Z2; d (through H), dbar and dunder for Z4.
Invariants invariants(const GCWComplex& x, std::optional<int> truncation = std::nullopt);

// Rank of the composite of maps given as basis images.
std::size_t map_rank(const std::vector<f2::BitVec>& images, std::size_t target_dim);

// Formal desuspension (X, m, n).
struct SpectrumClass {
    GCWComplex x;
    std::int64_t m = 0;
    Rat n;
};

struct SpectrumInvariants {
    Group group = Group::Z2;
    std::optional<Rat> d;
    std::optional<Rat> dbar;
    std::optional<Rat> dunder;
};

// Z2: d(X) - m - n. Z4: dbar(X) - m - 2n and dunder(X) - m - 2n.
SpectrumInvariants spectrum_invariants(const SpectrumClass& s, std::optional<int> truncation = std::nullopt);

enum class HeightMode { Standard, TheoremB };

struct HeightCheck {
    std::string invariant;  // which inequality
    Rat lhs;
    Rat rhs;
    bool holds = false;
};

struct HeightReport {
    std::vector<HeightCheck> checks;
    bool holds = true;
};

// Inequalities forced by a stable map of height l. Z2: d + l <= d'.
// Z4 standard: dbar + 2l <= dbar' and dunder + 2l <= dunder'. Z4 TheoremB:
// dunder + 2l <= dbar'.
HeightReport local_map_height_check(const SpectrumInvariants& source, const SpectrumInvariants& target,
                                    const Rat& height, HeightMode mode = HeightMode::Standard);

}  // namespace rsf
