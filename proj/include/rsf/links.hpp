#pragma once

#include "rsf/forms.hpp"
#include "rsf/rat.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rsf {

// Symbolic description of a link in one of the supported families.
struct LinkDesc {
    enum class Kind { Unknot, Torus, TwoBridge, Montesinos236, SeifertMatrix, GoeritzMatrix, ConnectedSum, Mirror };

    Kind kind = Kind::Unknot;
    std::int64_t p = 0;              // Torus(p,q), TwoBridge(p,q)
    std::int64_t q = 0;
    std::int64_t n = 0;              // Montesinos236: M(2,3,n)
    IntMatrix matrix;                // Seifert matrix V, or Goeritz form G
    std::int64_t correction = 0;     // Goeritz correction term
    std::vector<LinkDesc> parts;     // summands, or the single mirrored link
    std::string orientation_marker;  // carried, never interpreted

    static LinkDesc unknot();
    static LinkDesc torus(std::int64_t p, std::int64_t q);
    static LinkDesc two_bridge(std::int64_t p, std::int64_t q);
    static LinkDesc montesinos236(std::int64_t n);
    static LinkDesc seifert(IntMatrix v);
    static LinkDesc goeritz(IntMatrix g, std::int64_t correction);
    static LinkDesc sum(std::vector<LinkDesc> parts);
    static LinkDesc mirror(LinkDesc l);
};

// Throws ValidationError when the descriptor violates its family's constraints.
void validate(const LinkDesc& l);

struct ClassicalInvariants {
    std::int64_t signature = 0;
    Int determinant = 1;
};

// Signature with the convention sigma(T(2,3)) = -2.
std::int64_t link_signature(const LinkDesc& l);
Int link_determinant(const LinkDesc& l);
ClassicalInvariants classical_invariants(const LinkDesc& l);

std::string describe(const LinkDesc& l);

LinkDesc link_from_json(const nlohmann::json& j);
nlohmann::json link_to_json(const LinkDesc& l);

namespace links_detail {

// Seifert matrix of the closure of (s_1 ... s_{p-1})^q on p strands.
IntMatrix torus_seifert_matrix(std::int64_t p, std::int64_t q);
// Signature of T(p,q) from the lattice point count.
std::int64_t torus_signature_count(std::int64_t p, std::int64_t q);

// Seifert matrix of K(p,q) from an even continued fraction.
IntMatrix two_bridge_seifert_matrix(std::int64_t p, std::int64_t q);
std::vector<std::int64_t> even_continued_fraction(std::int64_t p, std::int64_t q);

struct GoeritzData {
    IntSymForm form;         // Goeritz form with one white region deleted
    std::int64_t mu = 0;     // correction term: sum of eta over type II crossings
    std::int64_t signature = 0;
};
// Goeritz form and correction of the alternating 4-plat diagram of K(p,q),
// using the given colour class as the white regions.
GoeritzData two_bridge_goeritz(std::int64_t p, std::int64_t q, int white_colour = 0);

// Symmetrized Seifert form V + V^T.
IntSymForm symmetrize(const IntMatrix& v);

}  // namespace links_detail

}  // namespace rsf
