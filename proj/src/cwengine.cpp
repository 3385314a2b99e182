#include "rsf/cwengine.hpp"

#include "rsf/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rsf {

int group_order(Group g) { return g == Group::Z2 ? 2 : 4; }

std::string group_name(Group g) { return g == Group::Z2 ? "Z2" : "Z4"; }

namespace {

Group group_from_name(const std::string& s)
{
    if (s == "Z2") return Group::Z2;
    if (s == "Z4") return Group::Z4;
    throw ValidationError("complex: unknown group '" + s + "' (expected Z2 or Z4)");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

GCWComplex::GCWComplex(Group group, int level, std::string basepoint, std::vector<CellSpec> cells,
                       std::map<std::string, std::string> action, bool require_sphere)
    : group_(group), level_(level)
{
    std::vector<std::string> errors;
    std::map<std::string, int> index;
    for (const auto& c : cells) {
        if (c.id.empty()) errors.push_back("a cell has an empty id");
        if (!index.emplace(c.id, static_cast<int>(ids_.size())).second)
            errors.push_back("cell '" + c.id + "': duplicate id");
        ids_.push_back(c.id);
        dims_.push_back(c.dim);
        if (c.dim < 0) errors.push_back("cell '" + c.id + "': negative dimension");
        dim_ = std::max(dim_, c.dim);
    }
    if (!errors.empty()) throw ValidationError("complex: " + join(errors, "; "));

    auto it = index.find(basepoint);
    if (it == index.end()) throw ValidationError("complex: basepoint '" + basepoint + "' is not a cell");
    base_ = it->second;

    bd_.resize(ids_.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::map<int, int> count;
        for (const auto& b : cells[c].boundary) {
            auto f = index.find(b);
            if (f == index.end()) {
                errors.push_back("cell '" + ids_[c] + "': unknown boundary cell '" + b + "'");
                continue;
            }
            ++count[f->second];
        }
        for (auto [b, k] : count)
            if (k % 2) bd_[c].push_back(b);
    }

    act_.resize(ids_.size());
    for (std::size_t c = 0; c < ids_.size(); ++c) act_[c] = static_cast<int>(c);
    for (const auto& [from, to] : action) {
        auto f = index.find(from);
        auto t = index.find(to);
        if (f == index.end()) {
            errors.push_back("action: unknown cell '" + from + "'");
            continue;
        }
        if (t == index.end()) {
            errors.push_back("action: cell '" + from + "' maps to unknown cell '" + to + "'");
            continue;
        }
        act_[f->second] = t->second;
    }
    if (!errors.empty()) throw ValidationError("complex: " + join(errors, "; "));

    validate(require_sphere);
}

int GCWComplex::act_h(int c) const
{
    return group_ == Group::Z2 ? act_[c] : act_[act_[c]];
}

std::optional<int> GCWComplex::find(const std::string& id) const
{
    for (std::size_t c = 0; c < ids_.size(); ++c)
        if (ids_[c] == id) return static_cast<int>(c);
    return std::nullopt;
}

void GCWComplex::validate(bool require_sphere)
{
    const int n = static_cast<int>(ids_.size());
    std::vector<std::string> errors;
    auto name = [&](int c) { return "'" + ids_[c] + "'"; };

    if (level_ < 0) errors.push_back("level must be nonnegative");
    if (dims_[base_] != 0) errors.push_back("basepoint " + name(base_) + " is not 0-dimensional");
    if (act_[base_] != base_) errors.push_back("basepoint " + name(base_) + " is not fixed");

    for (int c = 0; c < n; ++c)
        for (int b : bd_[c])
            if (dims_[b] != dims_[c] - 1)
                errors.push_back("cell " + name(c) + ": boundary cell " + name(b) + " has dimension "
                                 + std::to_string(dims_[b]));

    std::vector<int> seen(n, 0);
    for (int c = 0; c < n; ++c) ++seen[act_[c]];
    for (int c = 0; c < n; ++c)
        if (seen[c] != 1) errors.push_back("action is not a permutation at cell " + name(c));
    if (!errors.empty()) throw ValidationError("complex: " + join(errors, "; "));

    const int order = group_order(group_);
    for (int c = 0; c < n; ++c) {
        if (dims_[act_[c]] != dims_[c]) errors.push_back("action changes the dimension of cell " + name(c));
        int x = c;
        for (int k = 0; k < order; ++k) x = act_[x];
        if (x != c) errors.push_back("generator does not have order dividing " + std::to_string(order)
                                     + " on cell " + name(c));
        std::vector<int> moved;
        for (int b : bd_[c]) moved.push_back(act_[b]);
        std::sort(moved.begin(), moved.end());
        if (moved != bd_[act_[c]])
            errors.push_back("action does not commute with the boundary at cell " + name(c));
    }

    for (int c = 0; c < n; ++c) {
        std::map<int, int> count;
        for (int b : bd_[c])
            for (int a : bd_[b]) ++count[a];
        for (auto [a, k] : count)
            if (k % 2) {
                errors.push_back("boundary of boundary of cell " + name(c) + " is nonzero at " + name(a));
                break;
            }
    }

    for (int c = 0; c < n; ++c) {
        if (!h_fixed(c)) {
            // H has order 2, so a non-fixed cell has a free H-orbit.
            if (act_h(act_h(c)) != c) errors.push_back("H does not act freely on cell " + name(c));
            continue;
        }
        for (int b : bd_[c])
            if (!h_fixed(b))
                errors.push_back("fixed cell " + name(c) + " has non-fixed boundary cell " + name(b));
    }
    if (!errors.empty()) throw ValidationError("complex: " + join(errors, "; "));

    // Reduced F2 homology of the fixed subcomplex relative to the basepoint.
    std::vector<std::vector<int>> by_dim(dim_ + 2);
    std::vector<int> pos(n, -1);
    for (int c = 0; c < n; ++c)
        if (c != base_ && h_fixed(c)) {
            pos[c] = static_cast<int>(by_dim[dims_[c]].size());
            by_dim[dims_[c]].push_back(c);
        }
    std::vector<std::size_t> bd_rank(dim_ + 2, 0);
    for (int k = 1; k <= dim_; ++k) {
        std::vector<f2::BitVec> images;
        for (int c : by_dim[k]) {
            f2::BitVec v(by_dim[k - 1].size());
            for (int b : bd_[c])
                if (b != base_) v.set(pos[b]);
            images.push_back(std::move(v));
        }
        bd_rank[k] = f2::rank(images, by_dim[k - 1].size());
    }
    std::vector<long> betti(dim_ + 1);
    for (int k = 0; k <= dim_; ++k)
        betti[k] = static_cast<long>(by_dim[k].size()) - static_cast<long>(bd_rank[k])
                   - static_cast<long>(bd_rank[k + 1]);

    sphere_ = true;
    for (int k = 0; k <= dim_; ++k)
        if (betti[k] != (k == level_ ? 1 : 0)) sphere_ = false;
    if (level_ > dim_) sphere_ = false;
    if (require_sphere && !sphere_) {
        std::ostringstream os;
        os << "complex: fixed subcomplex does not have the F2 homology of S^" << level_ << " (reduced Betti numbers";
        for (int k = 0; k <= dim_; ++k) os << (k ? "," : " ") << betti[k];
        os << ")";
        throw ValidationError(os.str());
    }

    notes_.push_back("homotopy conditions on the fixed subcomplex checked through reduced F2 homology");
    notes_.push_back("freeness of H off the fixed subcomplex checked cell by cell");
}

GCWComplex GCWComplex::restrict_to_h() const
{
    std::map<std::string, std::string> action;
    for (std::size_t c = 0; c < ids_.size(); ++c) {
        int h = act_h(static_cast<int>(c));
        if (h != static_cast<int>(c)) action[ids_[c]] = ids_[h];
    }
    return GCWComplex(Group::Z2, level_, ids_[base_], cell_specs(), action, sphere_);
}

std::vector<CellSpec> GCWComplex::cell_specs() const
{
    std::vector<CellSpec> out;
    for (std::size_t c = 0; c < ids_.size(); ++c) {
        CellSpec s{ids_[c], dims_[c], {}};
        for (int b : bd_[c]) s.boundary.push_back(ids_[b]);
        out.push_back(std::move(s));
    }
    return out;
}

std::map<std::string, std::string> GCWComplex::action_map() const
{
    std::map<std::string, std::string> out;
    for (std::size_t c = 0; c < ids_.size(); ++c)
        if (act_[c] != static_cast<int>(c)) out[ids_[c]] = ids_[act_[c]];
    return out;
}

GCWComplex complex_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw ValidationError("complex: expected a JSON object");
    for (const char* key : {"group", "basepoint", "cells"})
        if (!j.contains(key)) throw ValidationError(std::string("complex: missing field '") + key + "'");
    try {
        Group g = group_from_name(j.at("group").get<std::string>());
        int level = j.value("level", 0);
        std::vector<CellSpec> cells;
        for (const auto& c : j.at("cells")) {
            CellSpec s;
            s.id = c.at("id").get<std::string>();
            s.dim = c.at("dim").get<int>();
            if (c.contains("bd")) s.boundary = c.at("bd").get<std::vector<std::string>>();
            cells.push_back(std::move(s));
        }
        std::map<std::string, std::string> action;
        if (j.contains("gen_action")) action = j.at("gen_action").get<std::map<std::string, std::string>>();
        bool sphere = j.value("sphere", true);
        return GCWComplex(g, level, j.at("basepoint").get<std::string>(), std::move(cells), std::move(action),
                          sphere);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("complex: malformed field: ") + e.what());
    }
}

nlohmann::json complex_to_json(const GCWComplex& x)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : x.cell_specs())
        cells.push_back({{"id", c.id}, {"dim", c.dim}, {"bd", c.boundary}});
    nlohmann::json j = {{"group", group_name(x.group())},
                        {"level", x.level()},
                        {"basepoint", x.id(x.basepoint())},
                        {"cells", cells},
                        {"gen_action", x.action_map()}};
    if (!x.sphere_type()) j["sphere"] = false;
    return j;
}

GCWComplex smash(const GCWComplex& x, const GCWComplex& y)
{
    if (x.group() != y.group())
        throw ValidationError("smash: group mismatch (" + group_name(x.group()) + " and " + group_name(y.group())
                              + ")");
    const int nx = static_cast<int>(x.cell_count());
    const int ny = static_cast<int>(y.cell_count());
    const int bx = x.basepoint();
    const int by = y.basepoint();
    const std::string base = x.id(bx) + "^" + y.id(by);
    auto pair_id = [&](int a, int b) { return x.id(a) + "^" + y.id(b); };

    std::vector<CellSpec> cells{{base, 0, {}}};
    std::map<std::string, std::string> action;
    for (int a = 0; a < nx; ++a) {
        if (a == bx) continue;
        for (int b = 0; b < ny; ++b) {
            if (b == by) continue;
            CellSpec s{pair_id(a, b), x.cell_dim(a) + y.cell_dim(b), {}};
            // A face meeting the basepoint of either factor collapses to the
            // basepoint, which only survives as a 0-dimensional face.
            for (int f : x.boundary(a)) {
                if (f != bx) s.boundary.push_back(pair_id(f, b));
                else if (y.cell_dim(b) == 0) s.boundary.push_back(base);
            }
            for (int f : y.boundary(b)) {
                if (f != by) s.boundary.push_back(pair_id(a, f));
                else if (x.cell_dim(a) == 0) s.boundary.push_back(base);
            }
            if (x.act(a) != a || y.act(b) != b) action[s.id] = pair_id(x.act(a), y.act(b));
            cells.push_back(std::move(s));
        }
    }
    return GCWComplex(x.group(), x.level() + y.level(), base, std::move(cells), std::move(action),
                      x.sphere_type() && y.sphere_type());
}

int rep_dim(Rep rep) { return rep == Rep::C ? 2 : 1; }

GCWComplex representation_sphere(Group g, Rep rep)
{
    switch (rep) {
    case Rep::R:
        return GCWComplex(g, 1, "inf", {{"inf", 0, {}}, {"e", 1, {}}}, {});
    case Rep::Rtilde: {
        // The generator acts by -1, swapping the two rays; t^2 then acts
        // trivially when G = Z4, so the whole sphere is H-fixed.
        int level = g == Group::Z2 ? 0 : 1;
        return GCWComplex(g, level, "inf",
                          {{"inf", 0, {}}, {"o", 0, {}}, {"e+", 1, {"o", "inf"}}, {"e-", 1, {"o", "inf"}}},
                          {{"e+", "e-"}, {"e-", "e+"}});
    }
    case Rep::C: {
        if (g != Group::Z4) throw ValidationError("suspension: C is only available for Z4");
        std::vector<CellSpec> cells{{"inf", 0, {}}, {"o", 0, {}}};
        std::map<std::string, std::string> action;
        for (int k = 0; k < 4; ++k) {
            std::string r = "r" + std::to_string(k);
            std::string f = "f" + std::to_string(k);
            cells.push_back({r, 1, {"o", "inf"}});
            cells.push_back({f, 2, {r, "r" + std::to_string((k + 1) % 4)}});
            action[r] = "r" + std::to_string((k + 1) % 4);
            action[f] = "f" + std::to_string((k + 1) % 4);
        }
        return GCWComplex(g, 0, "inf", std::move(cells), std::move(action));
    }
    }
    throw InternalError("representation_sphere: unknown representation");
}

GCWComplex suspend(const GCWComplex& x, Rep rep, int count)
{
    if (count < 0) throw ValidationError("suspension: count must be nonnegative");
    GCWComplex out = x;
    if (count == 0) return out;
    GCWComplex sphere = representation_sphere(x.group(), rep);
    for (int k = 0; k < count; ++k) out = smash(out, sphere);
    return out;
}

GCWComplex sphere_s0(Group g)
{
    return GCWComplex(g, 0, "b", {{"b", 0, {}}, {"p", 0, {}}}, {});
}

GCWComplex unreduced_suspension(Group g, const std::vector<int>& orbit_sizes)
{
    const int order = group_order(g);
    std::vector<CellSpec> cells{{"n", 0, {}}, {"s", 0, {}}};
    std::map<std::string, std::string> action;
    int fixed_points = 0;
    for (std::size_t k = 0; k < orbit_sizes.size(); ++k) {
        int m = orbit_sizes[k];
        if (m < 1 || order % m != 0)
            throw ValidationError("unreduced suspension: orbit size " + std::to_string(m) + " does not divide "
                                  + std::to_string(order));
        bool h_fixes = g == Group::Z2 ? m == 1 : m <= 2;
        if (h_fixes) fixed_points += m;
        for (int i = 0; i < m; ++i) {
            std::string a = "a" + std::to_string(k) + "_" + std::to_string(i);
            cells.push_back({a, 1, {"n", "s"}});
            if (m > 1) action[a] = "a" + std::to_string(k) + "_" + std::to_string((i + 1) % m);
        }
    }
    // The fixed part is the suspension of the H-fixed points: S^0 when there
    // are none, a circle when there are two, and not a sphere otherwise.
    int level = fixed_points == 0 ? 0 : 1;
    return GCWComplex(g, level, "n", std::move(cells), std::move(action));
}

GCWComplex g_tilde() { return unreduced_suspension(Group::Z4, {4}); }

}  // namespace rsf
