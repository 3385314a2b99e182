#include "rsf/cobordism.hpp"

#include "rsf/errors.hpp"

namespace rsf {

namespace {

Rat canonical(Rat r)
{
    r.canonicalize();
    return r;
}

Rat rat(std::int64_t v) { return Rat(static_cast<long>(v)); }

Rat rat_from_json(const nlohmann::json& j, const char* what)
{
    if (j.is_number_integer()) return rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ValidationError(std::string("cobordism: field '") + what + "' must be an integer or a \"p/q\" string");
}

InequalityCheck make_check(std::string name, const Rat& lhs, const Rat& rhs)
{
    InequalityCheck c{std::move(name), canonical(lhs), canonical(rhs), false};
    c.satisfied = c.lhs <= c.rhs;
    return c;
}

void add_check(CobordismReport& r, InequalityCheck c)
{
    r.satisfied = r.satisfied && c.satisfied;
    r.checks.push_back(std::move(c));
}

nlohmann::json check_to_json(const InequalityCheck& c)
{
    return {{"name", c.name}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}, {"satisfied", c.satisfied}};
}

}  // namespace

void validate(const SurfaceCobordismData& d)
{
    if (d.bplus_X < 0) throw ValidationError("cobordism: bplus_X must be nonnegative");
    if (d.b1_S < 0) throw ValidationError("cobordism: b1_S must be nonnegative");
    if (d.genus_S && *d.genus_S < 0) throw ValidationError("cobordism: genus_S must be nonnegative");
    std::int64_t bminus = d.bplus_X - d.sigma_X;
    if (bminus < 0)
        throw ValidationError("cobordism: sigma_X exceeds bplus_X, so b-(X) would be negative");
    if (d.b2_X && *d.b2_X != d.bplus_X + bminus)
        throw ValidationError("cobordism: b2_X = " + std::to_string(*d.b2_X) + " does not equal b+ + b- = "
                              + std::to_string(d.bplus_X + bminus));
}

Rat cover_signature(const SurfaceCobordismData& d)
{
    return canonical(2 * rat(d.sigma_X) - rat(d.e) / 2 - rat(d.sigma_L) + rat(d.sigma_Lp));
}

std::int64_t cover_b2(const SurfaceCobordismData& d)
{
    std::int64_t b2x = d.b2_X.value_or(2 * d.bplus_X - d.sigma_X);
    return 2 * b2x + d.b1_S;
}

Rat cover_bplus(const SurfaceCobordismData& d)
{
    return canonical(2 * rat(d.bplus_X) + rat(d.b1_S) / 2 - rat(d.e) / 4 - rat(d.sigma_L) / 2
                     + rat(d.sigma_Lp) / 2);
}

BranchedCoverHomology branched_homology(const SurfaceCobordismData& d)
{
    validate(d);
    Rat sigma = cover_signature(d);
    if (!is_integer(sigma))
        throw ValidationError("cobordism: signature of the branched cover " + to_string(sigma)
                              + " is not an integer (e must be even)");
    BranchedCoverHomology h;
    h.sigma = sigma.get_num().get_si();
    h.b2 = cover_b2(d);
    h.bplus = cover_bplus(d);
    Rat from_b2 = canonical((rat(h.b2) + sigma) / 2);
    if (from_b2 != h.bplus)
        throw InternalError("cobordism: b+ formula disagrees with (b2 + sigma)/2");
    if (!is_integer(h.bplus) || h.bplus < 0)
        throw ValidationError("cobordism: b+ of the branched cover is " + to_string(h.bplus)
                              + "; the inputs are inconsistent");
    if (h.b2 - h.bplus < 0)
        throw ValidationError("cobordism: b- of the branched cover is negative; the inputs are inconsistent");
    return h;
}

Rat hypothesis_value(const SurfaceCobordismData& d)
{
    return canonical(rat(d.bplus_X) + rat(d.b1_S) / 2 - rat(d.e) / 4 - rat(d.sigma_L) / 2 + rat(d.sigma_Lp) / 2);
}

Rat hypothesis_value_genus(const SurfaceCobordismData& d)
{
    if (!d.genus_S) throw ValidationError("cobordism: the genus form of the hypothesis needs genus_S");
    return canonical(rat(d.bplus_X) + rat(*d.genus_S) - rat(d.e) / 4 - rat(d.sigma_L) / 2 + rat(d.sigma_Lp) / 2);
}

Rat ineq1_correction(const SurfaceCobordismData& d)
{
    if (!d.c1_sq) throw ValidationError("cobordism: c1_sq is required");
    return canonical((*d.c1_sq - 2 * rat(d.sigma_X) - rat(d.e) / 2 - rat(d.sigma_L) + rat(d.sigma_Lp)) / 16);
}

Rat ineq2_correction(const SurfaceCobordismData& d)
{
    return canonical((-2 * rat(d.sigma_X) + rat(d.e) / 2 + rat(d.sigma_L) - rat(d.sigma_Lp)) / 16);
}

CobordismReport check_ineq1(const SurfaceCobordismData& d, const Rat& delta_L, const Rat& delta_Lp)
{
    validate(d);
    CobordismReport r;
    r.hypothesis = hypothesis_value(d);
    r.hypothesis_holds = r.hypothesis == 0;
    r.hypothesis_consistent = r.hypothesis >= 0;
    if (!r.hypothesis_consistent)
        r.notes.push_back("hypothesis value is negative; the inputs cannot come from a cobordism");
    add_check(r, make_check("delta(L)+c<=delta(L')", delta_L + ineq1_correction(d), delta_Lp));
    if (!r.hypothesis_holds) r.notes.push_back("hypothesis does not hold; the inequality is not implied");
    return r;
}

CobordismReport check_ineq2_and_theoremB(const SurfaceCobordismData& d, const DeltaTriple& L,
                                         const DeltaTriple& Lp, HypothesisForm form)
{
    validate(d);
    CobordismReport r;
    r.hypothesis = form == HypothesisForm::Genus ? hypothesis_value_genus(d) : hypothesis_value(d);
    r.hypothesis_consistent = r.hypothesis >= 0;
    if (d.genus_S && form == HypothesisForm::HalfB1 && hypothesis_value_genus(d) != r.hypothesis)
        r.notes.push_back("the genus form of the hypothesis gives " + to_string(hypothesis_value_genus(d)));
    if (!d.spin) {
        r.notes.push_back("inapplicable: a spin structure is required");
        return r;
    }
    const Rat c = ineq2_correction(d);
    if (r.hypothesis == 0) {
        r.hypothesis_holds = true;
        if (!L.dbar || !Lp.dbar || !L.dunder || !Lp.dunder)
            throw ValidationError("cobordism: dbar and dunder are required for both links");
        add_check(r, make_check("dbar(L)+c<=dbar(L')", *L.dbar + c, *Lp.dbar));
        add_check(r, make_check("dunder(L)+c<=dunder(L')", *L.dunder + c, *Lp.dunder));
    } else if (r.hypothesis == 1) {
        r.hypothesis_holds = true;
        if (!L.dunder || !Lp.dbar) throw ValidationError("cobordism: dunder(L) and dbar(L') are required");
        add_check(r, make_check("dunder(L)+c<=dbar(L')", *L.dunder + c, *Lp.dbar));
    } else {
        r.notes.push_back("inapplicable: hypothesis value " + to_string(r.hypothesis) + " is neither 0 nor 1");
    }
    return r;
}

ClosedReport check_closed(const Rat& c1_sq, std::int64_t sigma_W, std::int64_t bplus, std::int64_t bplus_inv)
{
    ClosedReport r;
    r.applicable = bplus == bplus_inv;
    r.value = canonical(c1_sq - rat(sigma_W));
    r.fires = r.applicable && r.value > 0;
    return r;
}

UnorientedBound unoriented_bound(std::int64_t sigma_K, std::int64_t e, const Rat& delta_K, const Int& det_K,
                                 bool mo_delta_zero)
{
    UnorientedBound b;
    Rat defect = canonical(rat(sigma_K) - rat(e) / 2);
    b.classical = defect < 0 ? Rat(-defect) : defect;
    b.bound = b.classical;
    if (det_K != 1) b.failed_hypotheses.push_back("determinant is " + det_K.get_str() + ", not 1");
    if (!mo_delta_zero) b.failed_hypotheses.push_back("Manolescu-Owen delta not asserted zero");
    if (delta_K >= 0) b.failed_hypotheses.push_back("delta_R = " + to_string(delta_K) + " is not negative");
    b.hypotheses_met = b.failed_hypotheses.empty();
    if (b.hypotheses_met) {
        Rat strong = canonical(-rat(sigma_K) + rat(e) / 2 + 1);
        if (strong > b.bound) {
            b.bound = strong;
            b.strengthened = true;
        }
    }
    return b;
}

SurfaceCobordismData crossing_change_data(std::int64_t sigma_K, std::int64_t sigma_Kp)
{
    SurfaceCobordismData d;
    d.b1_S = 0;
    d.c1_sq = make_rat(0);
    d.spin = true;
    if (sigma_K - sigma_Kp == 2) {
        d.bplus_X = 0;
        d.sigma_X = -1;
        d.e = -4;
        d.sigma_L = sigma_K;
        d.sigma_Lp = sigma_Kp;
    } else if (sigma_K == sigma_Kp) {
        d.bplus_X = 1;
        d.sigma_X = 1;
        d.e = 4;
        d.sigma_L = sigma_Kp;
        d.sigma_Lp = sigma_K;
    } else {
        throw ValidationError("crossing change: the signature drop must be 0 or 2");
    }
    return d;
}

SurfaceCobordismData cobordism_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw ValidationError("cobordism: expected a JSON object");
    SurfaceCobordismData d;
    try {
        d.bplus_X = j.value("bplus_X", std::int64_t{0});
        d.sigma_X = j.value("sigma_X", std::int64_t{0});
        if (j.contains("b2_X")) d.b2_X = j.at("b2_X").get<std::int64_t>();
        d.b1_S = j.value("b1_S", std::int64_t{0});
        if (j.contains("genus_S")) d.genus_S = j.at("genus_S").get<std::int64_t>();
        d.e = j.contains("S_dot_S") ? j.at("S_dot_S").get<std::int64_t>() : j.value("e", std::int64_t{0});
        d.sigma_L = j.value("sigma_L", std::int64_t{0});
        d.sigma_Lp = j.value("sigma_Lp", std::int64_t{0});
        if (j.contains("c1_sq")) d.c1_sq = rat_from_json(j.at("c1_sq"), "c1_sq");
        d.spin = j.value("spin", false);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("cobordism: malformed field: ") + e.what());
    }
    validate(d);
    return d;
}

nlohmann::json report_to_json(const CobordismReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    return {{"hypothesis", to_string(r.hypothesis)},
            {"hypothesis_holds", r.hypothesis_holds},
            {"hypothesis_consistent", r.hypothesis_consistent},
            {"checks", checks},
            {"satisfied", r.satisfied},
            {"notes", r.notes}};
}

nlohmann::json closed_to_json(const ClosedReport& r)
{
    return {{"applicable", r.applicable}, {"c1_sq_minus_sigma", to_string(r.value)}, {"fires", r.fires}};
}

nlohmann::json unoriented_to_json(const UnorientedBound& b)
{
    return {{"classical", to_string(b.classical)},
            {"bound", to_string(b.bound)},
            {"hypotheses_met", b.hypotheses_met},
            {"strengthened", b.strengthened},
            {"failed_hypotheses", b.failed_hypotheses}};
}

nlohmann::json homology_to_json(const BranchedCoverHomology& h)
{
    return {{"sigma", h.sigma}, {"b2", h.b2}, {"bplus", to_string(h.bplus)}, {"b1", h.b1}, {"b3", h.b3}};
}

}  // namespace rsf
