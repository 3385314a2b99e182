#include "rsf/froyshov.hpp"

#include "rsf/errors.hpp"
#include "rsf/plumbing.hpp"

namespace rsf {

std::string provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::FamilyFormula: return "family-formula";
    case Provenance::Table: return "table";
    case Provenance::Spherical: return "spherical";
    case Provenance::Derived: return "sum/mirror-derived";
    }
    return "unknown";
}

namespace {

DeltaTriple equal_triple(const Rat& v, Provenance p, bool spherical)
{
    return DeltaTriple{v, v, v, p, spherical};
}

Rat canonical(Rat r)
{
    r.canonicalize();
    return r;
}

}  // namespace

DeltaTriple montesinos_table(std::int64_t n)
{
    validate(LinkDesc::montesinos236(n));
    auto row = [](long dbar, long dbar_den, long delta, long delta_den, long dunder, long dunder_den,
                  bool spherical) {
        return DeltaTriple{make_rat(delta, delta_den), make_rat(dbar, dbar_den), make_rat(dunder, dunder_den),
                           Provenance::Table, spherical};
    };
    switch (n % 12) {
    case 11: return row(1, 2, 1, 2, 0, 1, false);
    case 7: return row(0, 1, 0, 1, -1, 2, false);
    case 1: return row(0, 1, 0, 1, 0, 1, true);
    case 5: return row(1, 2, 1, 2, 1, 2, true);
    }
    throw InternalError("montesinos table: unreachable residue");
}

Rat torus_delta_from_mubar(std::int64_t p, std::int64_t q)
{
    if (p % 2 == 0 || q % 2 == 0) throw ValidationError("torus delta: both parameters must be odd");
    return canonical(-mubar(SeifertData{{2, p, q}}) / 2);
}

DeltaTriple delta_triple(const LinkDesc& l)
{
    using K = LinkDesc::Kind;
    validate(l);
    switch (l.kind) {
    case K::Unknot:
        return equal_triple(make_rat(0), Provenance::FamilyFormula, true);
    case K::TwoBridge:
        return equal_triple(make_rat(-link_signature(l), 16), Provenance::FamilyFormula, true);
    case K::Torus: {
        if (l.p % 2 == 1 && l.q % 2 == 1)
            return equal_triple(torus_delta_from_mubar(l.p, l.q), Provenance::FamilyFormula, true);
        if (l.p == 2 || l.q == 2) {
            std::int64_t odd = l.p == 2 ? l.q : l.p;
            return delta_triple(LinkDesc::two_bridge(odd, 1));
        }
        throw UnsupportedError("delta of " + describe(l)
                               + " requires gauge theory (torus knot with an even parameter other than 2)");
    }
    case K::Montesinos236:
        return montesinos_table(l.n);
    case K::ConnectedSum: {
        DeltaTriple out{make_rat(0), make_rat(0), make_rat(0), Provenance::Derived, true};
        for (const auto& part : l.parts) {
            auto t = delta_triple(part);
            out.delta += t.delta;
            out.spherical = out.spherical && t.spherical;
        }
        out.delta.canonicalize();
        if (out.spherical) {
            out.dbar = out.delta;
            out.dunder = out.delta;
        } else {
            out.dbar.reset();
            out.dunder.reset();
        }
        return out;
    }
    case K::Mirror: {
        auto t = delta_triple(l.parts[0]);
        DeltaTriple out;
        out.delta = canonical(-t.delta);
        if (t.dunder) out.dbar = canonical(-*t.dunder);
        if (t.dbar) out.dunder = canonical(-*t.dbar);
        out.provenance = Provenance::Derived;
        out.spherical = t.spherical;
        return out;
    }
    case K::SeifertMatrix:
    case K::GoeritzMatrix:
        throw UnsupportedError("delta of " + describe(l)
                               + " requires gauge theory; supported families are two-bridge, odd torus, "
                                 "Montesinos M(2,3,n), sums and mirrors");
    }
    throw InternalError("unreachable link kind");
}

Rat spherical_delta(const SpectrumClass& s)
{
    const auto& x = s.x;
    if (x.cell_count() != 2 || x.dim() != 0 || x.level() != 0)
        throw ValidationError("spherical delta: the complex must be S0");
    return canonical(-Rat(static_cast<long>(s.m)) / 2 - s.n / 2);
}

KappaReport kappa_checks(const LinkDesc& l, const KappaValue& k, const KappaValue& k_mirror)
{
    KappaReport r;
    const Rat sigma(static_cast<long>(link_signature(l)));
    Rat value = canonical(2 * k.kappa + sigma / 8);
    Int fl = floor_rat(value / 2);
    r.congruence_residue = canonical(value - 2 * Rat(fl));
    r.congruence_holds = r.congruence_residue == 0;
    r.mirror_sum = canonical(k.kappa + k_mirror.kappa);
    r.mirror_sum_holds = r.mirror_sum >= 0;
    return r;
}

nlohmann::json delta_to_json(const DeltaTriple& t)
{
    nlohmann::json j;
    j["delta"] = to_string(t.delta);
    j["dbar"] = t.dbar ? nlohmann::json(to_string(*t.dbar)) : nlohmann::json(nullptr);
    j["dunder"] = t.dunder ? nlohmann::json(to_string(*t.dunder)) : nlohmann::json(nullptr);
    j["provenance"] = provenance_name(t.provenance);
    return j;
}

}  // namespace rsf
