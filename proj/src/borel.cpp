#include "rsf/cwengine.hpp"

#include "rsf/errors.hpp"

#include <algorithm>

namespace rsf {

namespace {

using f2::BitVec;

// Total complex of Hom over the group ring from the periodic resolution into
// reduced cellular cochains. Tot^n is the sum over q <= min(n, dim) of the
// cochains C^q placed at resolution degree n - q.
class TotalComplex {
public:
    TotalComplex(const GCWComplex& x, bool fixed_only) : x_(x)
    {
        const int n = static_cast<int>(x.cell_count());
        cells_.resize(x.dim() + 1);
        pos_.assign(n, -1);
        for (int c = 0; c < n; ++c) {
            if (c == x.basepoint() || (fixed_only && !x.h_fixed(c))) continue;
            pos_[c] = static_cast<int>(cells_[x.cell_dim(c)].size());
            cells_[x.cell_dim(c)].push_back(c);
        }
        coface_.resize(n);
        for (int c = 0; c < n; ++c) {
            if (pos_[c] < 0) continue;
            for (int b : x.boundary(c))
                if (pos_[b] >= 0) coface_[b].push_back(c);
        }
    }

    int top() const { return x_.dim(); }
    const std::vector<int>& cells(int q) const { return cells_[q]; }
    int pos(int c) const { return pos_[c]; }

    // offsets[q] is where the summand C^q starts in Tot^n; the last entry is
    // the total size.
    std::vector<std::size_t> offsets(int n) const
    {
        std::vector<std::size_t> off;
        std::size_t at = 0;
        for (int q = 0; q <= std::min(n, top()); ++q) {
            off.push_back(at);
            at += cells_[q].size();
        }
        off.push_back(at);
        return off;
    }

    std::size_t size(int n) const { return offsets(n).back(); }

    // Images of the basis of Tot^n under the total differential.
    std::vector<BitVec> differential(int n) const
    {
        const auto src = offsets(n);
        const auto dst = offsets(n + 1);
        std::vector<BitVec> out;
        const int order = group_order(x_.group());
        for (int q = 0; q <= std::min(n, top()); ++q) {
            const int p = n - q;
            // Powers of t in the resolution differential leaving degree p.
            int terms = 2;
            if (order == 4 && p % 2 == 1) terms = 4;
            for (int c : cells_[q]) {
                BitVec v(dst.back());
                for (int c2 : coface_[c]) v.flip(dst[q + 1] + pos_[c2]);
                int y = c;
                for (int k = 0; k < terms; ++k) {
                    v.flip(dst[q] + pos_[y]);
                    y = x_.act(y);
                }
                out.push_back(std::move(v));
            }
        }
        return out;
    }

private:
    const GCWComplex& x_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> coface_;
};

// Cohomology of a total complex in degrees 0..N with representatives and
// a coordinate map.
class Cohomology {
public:
    Cohomology(const TotalComplex& t, int truncation) : t_(t)
    {
        std::vector<std::vector<BitVec>> diff;
        for (int n = 0; n <= truncation; ++n) diff.push_back(t.differential(n));
        for (int n = 0; n <= truncation; ++n) {
            const std::size_t len = t.size(n);
            auto cycles = f2::kernel(diff[n], t.size(n + 1));
            std::size_t boundary_rank = n == 0 ? 0 : f2::rank(diff[n - 1], len);
            if (boundary_rank > cycles.size()) throw InternalError("borel: boundaries exceed cycles");
            const std::size_t h = cycles.size() - boundary_rank;
            f2::Echelon e(len, h);
            if (n > 0)
                for (const auto& b : diff[n - 1]) e.insert(b, BitVec(h));
            std::vector<BitVec> reps;
            for (const auto& z : cycles) {
                if (reps.size() == h) break;
                BitVec tag(h);
                tag.set(reps.size());
                if (e.insert(z, tag)) reps.push_back(z);
            }
            if (reps.size() != h) throw InternalError("borel: cohomology basis incomplete");
            reps_.push_back(std::move(reps));
            basis_.push_back(std::move(e));
        }
    }

    std::size_t dim(int n) const { return reps_[n].size(); }
    const std::vector<BitVec>& reps(int n) const { return reps_[n]; }

    BitVec coordinates(int n, BitVec v) const
    {
        BitVec tag(dim(n));
        basis_[n].reduce(v, &tag);
        if (v.any()) throw InternalError("borel: vector is not a cocycle");
        return tag;
    }

    const TotalComplex& total() const { return t_; }

private:
    const TotalComplex& t_;
    std::vector<std::vector<BitVec>> reps_;
    std::vector<f2::Echelon> basis_;
};

BitVec shift_cochain(const TotalComplex& t, const BitVec& v, int n, int shift)
{
    const auto src = t.offsets(n);
    const auto dst = t.offsets(n + shift);
    BitVec out(dst.back());
    for (std::size_t q = 0; q + 1 < src.size(); ++q)
        for (std::size_t j = 0; j < src[q + 1] - src[q]; ++j)
            if (v.get(src[q] + j)) out.set(dst[q] + j);
    return out;
}

BitVec restrict_cochain(const TotalComplex& from, const TotalComplex& to, const BitVec& v, int n)
{
    const auto src = from.offsets(n);
    const auto dst = to.offsets(n);
    BitVec out(dst.back());
    for (std::size_t q = 0; q + 1 < src.size(); ++q) {
        const auto& cells = from.cells(static_cast<int>(q));
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (!v.get(src[q] + j)) continue;
            int p = to.pos(cells[j]);
            if (p >= 0) out.set(dst[q] + static_cast<std::size_t>(p));
        }
    }
    return out;
}

// Images of the basis under the composite of the given maps.
std::vector<BitVec> compose_power(const BorelCohomology& bc, int n, int steps)
{
    std::vector<BitVec> images;
    for (int i = 0; i < bc.dims[n]; ++i) {
        BitVec e(bc.dims[n]);
        e.set(i);
        images.push_back(std::move(e));
    }
    int deg = n;
    for (int s = 0; s < steps; ++s) {
        const auto& map = bc.periodicity[deg];
        const int target = bc.dims[deg + bc.shift];
        for (auto& v : images) v = f2::apply(map, v, target);
        deg += bc.shift;
    }
    return images;
}

void require_sphere(const GCWComplex& x, const char* what)
{
    if (!x.sphere_type())
        throw ValidationError(std::string(what) + ": the fixed subcomplex must have the homology of a sphere");
}

}  // namespace

std::size_t map_rank(const std::vector<BitVec>& images, std::size_t target_dim)
{
    return f2::rank(images, target_dim);
}

int default_truncation(const GCWComplex& x) { return x.dim() + 10; }

BorelCohomology borel_cohomology(const GCWComplex& x, int truncation)
{
    if (truncation < x.dim() + 4)
        throw ValidationError("borel cohomology: truncation " + std::to_string(truncation)
                              + " is below dim + 4 = " + std::to_string(x.dim() + 4));
    TotalComplex whole(x, false);
    TotalComplex fixed(x, true);
    Cohomology hx(whole, truncation);
    Cohomology hf(fixed, truncation);

    BorelCohomology bc;
    bc.group = x.group();
    bc.truncation = truncation;
    bc.shift = x.group() == Group::Z2 ? 1 : 2;
    for (int n = 0; n <= truncation; ++n) {
        bc.dims.push_back(static_cast<int>(hx.dim(n)));
        bc.fixed_dims.push_back(static_cast<int>(hf.dim(n)));
    }
    for (int n = 0; n + bc.shift <= truncation; ++n) {
        std::vector<BitVec> images;
        for (const auto& z : hx.reps(n))
            images.push_back(hx.coordinates(n + bc.shift, shift_cochain(whole, z, n, bc.shift)));
        bc.periodicity.push_back(std::move(images));
    }
    for (int n = 0; n <= truncation; ++n) {
        std::vector<BitVec> images;
        for (const auto& z : hx.reps(n)) images.push_back(hf.coordinates(n, restrict_cochain(whole, fixed, z, n)));
        bc.restriction.push_back(std::move(images));
    }
    return bc;
}

namespace {

// Whether some class in degree n has all its periodicity images nonzero.
// Checked at the first power L beyond the stable range and re-checked at
// L + 1 and L + 2, which must agree.
int stable_power(const BorelCohomology& bc, int n, int top)
{
    int L = 0;
    while (n + bc.shift * L <= top + 2) ++L;
    return L;
}

bool survival_fits(const BorelCohomology& bc, int n, int top)
{
    return n + bc.shift * (stable_power(bc, n, top) + 2) <= bc.truncation;
}

bool survives(const BorelCohomology& bc, int n, int top)
{
    const int L = stable_power(bc, n, top);
    if (!survival_fits(bc, n, top))
        throw InternalError("invariants: truncation " + std::to_string(bc.truncation)
                            + " too small for the stability re-check at degree " + std::to_string(n));
    if (bc.dims[n] == 0) return false;
    bool result = false;
    for (int k = 0; k < 3; ++k) {
        auto images = compose_power(bc, n, L + k);
        bool alive = map_rank(images, bc.dims[n + bc.shift * (L + k)]) > 0;
        if (k == 0) result = alive;
        else if (alive != result)
            throw InternalError("invariants: periodicity survival unstable at degree " + std::to_string(n));
    }
    return result;
}

int first_restriction_degree(const BorelCohomology& bc)
{
    for (int n = 0; n <= bc.truncation; ++n)
        if (map_rank(bc.restriction[n], bc.fixed_dims[n]) > 0) return n;
    throw InternalError("d invariant: no class restricts nontrivially below the truncation bound");
}

}  // namespace

int d_invariant(const GCWComplex& x, std::optional<int> truncation)
{
    if (x.group() != Group::Z2) throw ValidationError("d invariant: requires G = Z2");
    require_sphere(x, "d invariant");
    auto bc = borel_cohomology(x, truncation.value_or(default_truncation(x)));
    int d = first_restriction_degree(bc);
    // Localization: a class restricts nontrivially exactly when its W-tower
    // survives. The two descriptions must agree wherever the truncation
    // leaves room for the survival test.
    for (int n = 0; n <= d && survival_fits(bc, n, x.dim()); ++n) {
        bool restricts = map_rank(bc.restriction[n], bc.fixed_dims[n]) > 0;
        if (survives(bc, n, x.dim()) != restricts)
            throw InternalError("d invariant: restriction and W-tower disagree at degree " + std::to_string(n));
    }
    return d;
}

std::pair<int, int> dbar_dunder(const GCWComplex& x, std::optional<int> truncation)
{
    if (x.group() != Group::Z4) throw ValidationError("dbar/dunder: requires G = Z4");
    require_sphere(x, "dbar/dunder");
    auto bc = borel_cohomology(x, truncation.value_or(default_truncation(x)));
    const int s = x.level() % 2;
    std::optional<int> even_min;  // degrees congruent to s
    std::optional<int> odd_min;   // degrees congruent to s + 1
    for (int n = 0; n <= x.dim() + 3 && (!even_min || !odd_min); ++n) {
        bool alive = survives(bc, n, x.dim());
        bool restricts = map_rank(bc.restriction[n], bc.fixed_dims[n]) > 0;
        if (alive != restricts)
            throw InternalError("dbar/dunder: restriction and U-tower disagree at degree " + std::to_string(n));
        if (!alive) continue;
        if (n % 2 == s) {
            if (!even_min) even_min = n;
        } else if (!odd_min) {
            odd_min = n;
        }
    }
    if (!even_min || !odd_min)
        throw InternalError("dbar/dunder: no surviving class found below dim + 4");
    return {*even_min, *odd_min - 1};
}

Invariants invariants(const GCWComplex& x, std::optional<int> truncation)
{
    Invariants out;
    if (x.group() == Group::Z2) {
        out.d = d_invariant(x, truncation);
    } else {
        out.d = d_invariant(x.restrict_to_h(), truncation);
        auto [dbar, dunder] = dbar_dunder(x, truncation);
        out.dbar = dbar;
        out.dunder = dunder;
    }
    return out;
}

SpectrumInvariants spectrum_invariants(const SpectrumClass& s, std::optional<int> truncation)
{
    SpectrumInvariants out;
    out.group = s.x.group();
    auto inv = invariants(s.x, truncation);
    const Rat m(static_cast<long>(s.m));
    if (out.group == Group::Z2) {
        out.d = Rat(*inv.d) - m - s.n;
    } else {
        out.d = Rat(*inv.d) - m - s.n;
        out.dbar = Rat(*inv.dbar) - m - 2 * s.n;
        out.dunder = Rat(*inv.dunder) - m - 2 * s.n;
        out.d->canonicalize();
        out.dbar->canonicalize();
        out.dunder->canonicalize();
    }
    out.d->canonicalize();
    return out;
}

HeightReport local_map_height_check(const SpectrumInvariants& source, const SpectrumInvariants& target,
                                    const Rat& height, HeightMode mode)
{
    HeightReport report;
    auto add = [&](const std::string& name, const std::optional<Rat>& a, const std::optional<Rat>& b,
                   const Rat& step) {
        if (!a || !b) return;
        HeightCheck c{name, Rat(*a + step), *b, false};
        c.lhs.canonicalize();
        c.holds = c.lhs <= c.rhs;
        report.holds = report.holds && c.holds;
        report.checks.push_back(std::move(c));
    };
    if (mode == HeightMode::TheoremB) {
        add("dunder+2l<=dbar'", source.dunder, target.dbar, 2 * height);
    } else if (source.group == Group::Z2 || (!source.dbar && !target.dbar)) {
        add("d+l<=d'", source.d, target.d, height);
    } else {
        add("dbar+2l<=dbar'", source.dbar, target.dbar, 2 * height);
        add("dunder+2l<=dunder'", source.dunder, target.dunder, 2 * height);
    }
    return report;
}

}  // namespace rsf
