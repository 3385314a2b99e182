#include "diagram.hpp"

#include "rsf/errors.hpp"

#include <deque>
#include <numeric>
#include <string>

namespace rsf::diagram {

Diagram::Diagram(std::vector<Crossing> crossings, int edge_count)
    : crossings_(std::move(crossings)), ends_(edge_count)
{
    for (int x = 0; x < crossing_count(); ++x)
        for (int i = 0; i < 4; ++i) {
            int e = crossings_[x].edge[i];
            if (e < 0 || e >= edge_count) throw InternalError("diagram: edge label out of range");
            ends_[e].push_back({x, i});
        }
    for (int e = 0; e < edge_count; ++e)
        if (ends_[e].size() != 2)
            throw InternalError("diagram: edge " + std::to_string(e) + " does not have two ends");
    build_faces();
    build_colouring();
    build_orientation();
}

Diagram::End Diagram::other_end(int x, int pos) const
{
    const auto& ends = ends_[crossings_[x].edge[pos]];
    return ends[0] == End{x, pos} ? ends[1] : ends[0];
}

void Diagram::build_faces()
{
    corner_face_.assign(crossings_.size(), {-1, -1, -1, -1});
    for (int x = 0; x < crossing_count(); ++x) {
        for (int i = 0; i < 4; ++i) {
            if (corner_face_[x][i] >= 0) continue;
            const int f = static_cast<int>(face_size_.size());
            int size = 0;
            int cx = x, ci = i;
            while (corner_face_[cx][ci] < 0) {
                corner_face_[cx][ci] = f;
                ++size;
                // Leave along the edge at position ci+1; the face stays on the right.
                End next = other_end(cx, (ci + 1) % 4);
                cx = next.first;
                ci = next.second;
            }
            if (cx != x || ci != i) throw InternalError("diagram: face walk did not close");
            face_size_.push_back(size);
        }
    }
    const int euler = crossing_count() - 2 * crossing_count() + face_count();
    if (crossing_count() > 0 && euler != 2)
        throw InternalError("diagram: not a connected planar diagram (V-E+F = "
                            + std::to_string(euler) + ")");
}

void Diagram::build_colouring()
{
    colour_.assign(face_count(), -1);
    // Faces meeting at adjacent corners lie on opposite sides of an edge.
    std::vector<std::vector<int>> adj(face_count());
    for (int x = 0; x < crossing_count(); ++x)
        for (int i = 0; i < 4; ++i) {
            int a = corner_face_[x][i], b = corner_face_[x][(i + 1) % 4];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    for (int s = 0; s < face_count(); ++s) {
        if (colour_[s] >= 0) continue;
        colour_[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            for (int g : adj[f]) {
                if (colour_[g] < 0) {
                    colour_[g] = 1 - colour_[f];
                    queue.push_back(g);
                } else if (colour_[g] == colour_[f]) {
                    throw InternalError("diagram: faces are not two-colourable");
                }
            }
        }
    }
}

void Diagram::build_orientation()
{
    incoming_.assign(crossings_.size(), {false, false, false, false});
    std::vector<bool> seen(ends_.size(), false);
    for (std::size_t start = 0; start < ends_.size(); ++start) {
        if (seen[start]) continue;
        ++components_;
        std::vector<End> trace;
        int e = static_cast<int>(start);
        End head = ends_[start][1];
        while (!seen[e]) {
            seen[e] = true;
            auto [x, k] = head;
            incoming_[x][k] = true;
            trace.push_back(head);
            const int out = (k + 2) % 4;
            e = crossings_[x].edge[out];
            head = other_end(x, out);
        }
        traces_.push_back(std::move(trace));
    }
}

bool Diagram::alternating() const
{
    for (const auto& trace : traces_) {
        if (trace.size() < 2) continue;
        for (std::size_t i = 0; i < trace.size(); ++i) {
            auto [x, k] = trace[i];
            auto [y, l] = trace[(i + 1) % trace.size()];
            bool over_here = (k % 2) == crossings_[x].over;
            bool over_next = (l % 2) == crossings_[y].over;
            if (over_here == over_next) return false;
        }
    }
    return true;
}

GoeritzResult goeritz(const Diagram& d, int white_colour, int eta_sign)
{
    std::vector<int> index(d.face_count(), -1);
    int whites = 0;
    for (int f = 0; f < d.face_count(); ++f)
        if (d.face_colour(f) == white_colour) index[f] = whites++;

    std::vector<std::vector<std::int64_t>> g(whites, std::vector<std::int64_t>(whites, 0));
    std::int64_t mu = 0;
    for (int x = 0; x < d.crossing_count(); ++x) {
        const int w = (d.face_colour(d.corner_face(x, 0)) == white_colour) ? 0 : 1;
        // Rotating the over strand counterclockwise sweeps corners over and over+2.
        const int eta = (w == d.crossing(x).over) ? eta_sign : -eta_sign;
        const int a = index[d.corner_face(x, w)];
        const int b = index[d.corner_face(x, w + 2)];
        if (a != b) {
            g[a][b] -= eta;
            g[b][a] -= eta;
            g[a][a] += eta;
            g[b][b] += eta;
        }
        // Type II: the white corners sit between an incoming and an outgoing end.
        if (d.incoming(x, w) != d.incoming(x, (w + 1) % 4)) mu += eta;
    }
    if (whites > 0) {
        g.pop_back();
        for (auto& row : g) row.pop_back();
    }
    return {IntSymForm(std::move(g)), mu};
}

Diagram plat_diagram(const std::vector<std::int64_t>& terms)
{
    if (terms.size() % 2 == 0) throw InternalError("plat: number of terms must be odd");
    // Union-find over provisional edge labels; caps identify labels.
    std::vector<int> parent;
    auto fresh = [&]() {
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(parent.size()) - 1;
    };
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    std::array<int, 4> cur{};
    cur[0] = cur[1] = fresh();
    cur[2] = cur[3] = fresh();

    std::vector<Crossing> crossings;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const int left = (k % 2 == 0) ? 1 : 0;  // s2 twists strands 1,2; s1 twists 0,1
        const std::int64_t power = (k % 2 == 0) ? terms[k] : -terms[k];
        const std::int64_t count = power < 0 ? -power : power;
        for (std::int64_t c = 0; c < count; ++c) {
            // Counterclockwise: top-right, top-left, bottom-left, bottom-right.
            Crossing x;
            const int bl = fresh(), br = fresh();
            x.edge = {cur[left + 1], cur[left], bl, br};
            // Positive generator: the strand from top-left to bottom-right is over.
            x.over = power > 0 ? 1 : 0;
            crossings.push_back(x);
            cur[left] = bl;
            cur[left + 1] = br;
        }
    }
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    unite(cur[0], cur[1]);
    unite(cur[2], cur[3]);

    std::vector<int> label(parent.size(), -1);
    int edges = 0;
    for (auto& x : crossings)
        for (auto& e : x.edge) {
            int r = find(e);
            if (label[r] < 0) label[r] = edges++;
            e = label[r];
        }
    return Diagram(std::move(crossings), edges);
}

}  // namespace rsf::diagram
