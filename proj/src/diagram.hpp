#pragma once

#include "rsf/forms.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace rsf::diagram {

// A crossing lists its four incident edges in counterclockwise order. The two
// strands run through positions (0,2) and (1,3); `over` is 0 or 1 and names
// the strand passing over.
struct Crossing {
    std::array<int, 4> edge{};
    int over = 0;
};

// Planar link diagram given by crossings with counterclockwise edge order.
class Diagram {
public:
    Diagram(std::vector<Crossing> crossings, int edge_count);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int face_count() const { return static_cast<int>(face_size_.size()); }
    int component_count() const { return components_; }

    // Face containing the corner between positions i and i+1 of crossing x.
    int corner_face(int x, int i) const { return corner_face_[x][i]; }
    int face_colour(int f) const { return colour_[f]; }
    bool incoming(int x, int i) const { return incoming_[x][i]; }
    const Crossing& crossing(int x) const { return crossings_[x]; }

    // True when over and under alternate along every component.
    bool alternating() const;

private:
    using End = std::pair<int, int>;  // (crossing, position)
    End other_end(int x, int pos) const;
    void build_faces();
    void build_colouring();
    void build_orientation();

    std::vector<Crossing> crossings_;
    std::vector<std::vector<End>> ends_;
    std::vector<std::array<int, 4>> corner_face_;
    std::vector<int> face_size_;
    std::vector<int> colour_;
    std::vector<std::array<bool, 4>> incoming_;
    std::vector<std::vector<End>> traces_;
    int components_ = 0;
};

struct GoeritzResult {
    IntSymForm form;
    std::int64_t mu = 0;
};

// Goeritz form on the faces of the given colour (one face deleted) and the
// Gordon-Litherland correction. `eta_sign` fixes the global crossing-incidence
// convention.
GoeritzResult goeritz(const Diagram& d, int white_colour, int eta_sign);

// 4-plat closure of s2^{a1} s1^{-a2} s2^{a3} ... on strands 0..3 with caps
// joining (0,1) and (2,3) at both ends. The number of terms must be odd.
Diagram plat_diagram(const std::vector<std::int64_t>& terms);

}  // namespace rsf::diagram
