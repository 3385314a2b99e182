#include "rsf/surfaces.hpp"

#include "rsf/cobordism.hpp"
#include "rsf/errors.hpp"
#include "rsf/froyshov.hpp"

#include <algorithm>
#include <sstream>

namespace rsf {

std::string status_name(PairStatus s)
{
    switch (s) {
    case PairStatus::ObstructedClassical: return "obstructed-classical";
    case PairStatus::ObstructedRealFroyshov: return "obstructed-real-froyshov";
    case PairStatus::Unobstructed: return "unobstructed-by-these-tools";
    }
    return "unknown";
}

std::set<std::pair<std::int64_t, std::int64_t>> PairRegion::with_status(PairStatus s) const
{
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : pairs)
        if (p.status == s) out.insert({p.e, p.h});
    return out;
}

bool mo_delta_zero_allowlisted(const LinkDesc& k)
{
    if (k.kind != LinkDesc::Kind::Torus) return false;
    std::int64_t a = std::min(k.p, k.q);
    std::int64_t b = std::max(k.p, k.q);
    return a == 3 && b >= 7 && b % 6 == 1;
}

PairRegion classify_pairs(const LinkDesc& k, const PairWindow& window, std::optional<bool> mo_delta_zero,
                          int sign_convention)
{
    return classify_pairs_from(link_signature(k), link_determinant(k), delta_triple(k).delta,
                               mo_delta_zero.value_or(mo_delta_zero_allowlisted(k)), window, sign_convention);
}

PairRegion classify_pairs_from(std::int64_t sigma, const Int& determinant, const Rat& delta, bool mo_delta_zero,
                               const PairWindow& window, int sign_convention)
{
    if (sign_convention != 1 && sign_convention != -1)
        throw ValidationError("enumerate: sign convention must be +1 or -1");
    if (window.e_min > window.e_max || window.h_min > window.h_max || window.h_min < 1)
        throw ValidationError("enumerate: empty window or h_min below 1");

    PairRegion r;
    r.window = window;
    r.sign_convention = sign_convention;
    r.sigma = sigma;
    r.determinant = determinant;
    r.delta = delta;
    r.mo_delta_zero = mo_delta_zero;

    auto probe = unoriented_bound(r.sigma, 0, r.delta, r.determinant, r.mo_delta_zero);
    r.hypotheses_met = probe.hypotheses_met;
    r.failed_hypotheses = probe.failed_hypotheses;

    for (std::int64_t e = window.e_min; e <= window.e_max; ++e) {
        const std::int64_t ee = sign_convention * e;
        for (std::int64_t h = window.h_min; h <= window.h_max; ++h) {
            ClassifiedPair p{e, h, PairStatus::Unobstructed, ""};
            if (ee % 2 != 0) {
                p.status = PairStatus::ObstructedClassical;
                p.reason = "e/2 is not an integer";
            } else {
                const std::int64_t half = ee / 2;
                const std::int64_t defect = r.sigma - half;
                auto b = unoriented_bound(r.sigma, ee, r.delta, r.determinant, r.mo_delta_zero);
                if (Rat(static_cast<long>(h)) < b.classical) {
                    p.status = PairStatus::ObstructedClassical;
                    p.reason = "h < |sigma - e/2|";
                } else if ((h - defect) % 2 != 0) {
                    p.status = PairStatus::ObstructedClassical;
                    p.reason = "h and sigma - e/2 differ in parity";
                } else if (Rat(static_cast<long>(h)) < b.bound) {
                    p.status = PairStatus::ObstructedRealFroyshov;
                    p.reason = "h = -sigma + e/2 excluded by the real Froyshov bound";
                }
            }
            r.pairs.push_back(std::move(p));
        }
    }
    return r;
}

std::set<std::pair<std::int64_t, std::int64_t>> corollary_family(std::int64_t n, const PairWindow& window)
{
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    const std::int64_t centre = -2 - 16 * n;
    for (std::int64_t m = 0; 1 + m <= window.h_max; ++m)
        for (std::int64_t sgn : {1, -1}) {
            std::int64_t e = centre + sgn * 2 * m;
            if (e < window.e_min || e > window.e_max) continue;
            for (std::int64_t h = 1 + m; h <= window.h_max; h += 2)
                if (h >= window.h_min) out.insert({e, h});
        }
    return out;
}

std::string render_grid(const PairRegion& r)
{
    std::ostringstream os;
    const auto& w = r.window;
    const std::int64_t cols = w.e_max - w.e_min + 1;
    for (std::int64_t h = w.h_max; h >= w.h_min; --h) {
        os.width(4);
        os << h << " ";
        for (std::int64_t c = 0; c < cols; ++c) {
            const auto& p = r.pairs[static_cast<std::size_t>(c * (w.h_max - w.h_min + 1) + (h - w.h_min))];
            char ch = '.';
            if (p.status == PairStatus::Unobstructed) ch = 'o';
            if (p.status == PairStatus::ObstructedRealFroyshov) ch = 'x';
            os << ch;
        }
        os << "\n";
    }
    os << "     e = " << w.e_min << " .. " << w.e_max << "\n";
    return os.str();
}

nlohmann::json region_to_json(const PairRegion& r)
{
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"e", p.e}, {"h", p.h}, {"status", status_name(p.status)}, {"reason", p.reason}});
    return {{"window",
             {{"e_min", r.window.e_min}, {"e_max", r.window.e_max}, {"h_min", r.window.h_min},
              {"h_max", r.window.h_max}}},
            {"sign_convention", r.sign_convention},
            {"sigma", r.sigma},
            {"determinant", r.determinant.get_str()},
            {"delta", to_string(r.delta)},
            {"mo_delta_zero", r.mo_delta_zero},
            {"hypotheses_met", r.hypotheses_met},
            {"failed_hypotheses", r.failed_hypotheses},
            {"pairs", pairs}};
}

}  // namespace rsf
