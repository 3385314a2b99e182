#include "rsf/cli.hpp"

#include "rsf/cobordism.hpp"
#include "rsf/cwengine.hpp"
#include "rsf/errors.hpp"
#include "rsf/froyshov.hpp"
#include "rsf/links.hpp"
#include "rsf/plumbing.hpp"
#include "rsf/surfaces.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rsf::cli {

namespace {

using nlohmann::json;

json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON in " + origin + " at byte " + std::to_string(e.byte) + ": "
                              + e.what());
    }
}

// An argument is a path to a JSON file when such a file exists, otherwise
// inline JSON.
json read_json_arg(const std::string& arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw ValidationError("cannot read '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_json_text(ss.str(), "'" + arg + "'");
    }
    return parse_json_text(arg, "argument");
}

json integer_json(const Int& v)
{
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json invariants_json(const GCWComplex& x, std::optional<int> truncation)
{
    auto inv = invariants(x, truncation);
    if (x.group() == Group::Z2) return {{"d", *inv.d}};
    return {{"dbar", *inv.dbar}, {"dunder", *inv.dunder}};
}

void log_notes(CommandResult& r, const GCWComplex& x)
{
    for (const auto& n : x.validation_notes()) r.provenance_log.push_back({n, "validation"});
}

Rat rat_field(const json& j, const char* key)
{
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw ValidationError(std::string("field '") + key + "' must be an integer or a \"p/q\" string");
}

DeltaTriple triple_field(const json& j, const char* link_key, const char* delta_key)
{
    DeltaTriple t = j.contains(link_key) ? delta_triple(link_from_json(j.at(link_key)))
                                         : delta_triple(LinkDesc::unknot());
    if (j.contains(delta_key)) {
        t.delta = rat_field(j, delta_key);
        t.provenance = Provenance::Derived;
    }
    return t;
}

CommandResult cmd_signature(const std::string& arg)
{
    auto l = link_from_json(read_json_arg(arg));
    CommandResult r;
    auto s = link_signature(l);
    r.payload = {{"link", describe(l)}, {"signature", s}};
    r.provenance_log.push_back({std::to_string(s), "computed"});
    return r;
}

CommandResult cmd_determinant(const std::string& arg)
{
    auto l = link_from_json(read_json_arg(arg));
    CommandResult r;
    auto d = link_determinant(l);
    r.payload = {{"link", describe(l)}, {"determinant", integer_json(d)}};
    r.provenance_log.push_back({d.get_str(), l.kind == LinkDesc::Kind::Montesinos236 ? "family" : "computed"});
    return r;
}

CommandResult cmd_mubar(const std::string& arg)
{
    auto s = seifert_from_json(read_json_arg(arg));
    auto g = canonical_plumbing(s);
    CommandResult r;
    Rat m = mubar(s);
    r.payload = {{"multiplicities", s.multiplicities},
                 {"plumbing", plumbing_to_json(g)},
                 {"wu_class", g.weights.empty() ? std::vector<std::int64_t>{} : wu_class(g)},
                 {"mubar", to_string(m)}};
    r.provenance_log.push_back({to_string(m), "computed"});
    return r;
}

CommandResult cmd_delta(const std::string& arg)
{
    auto l = link_from_json(read_json_arg(arg));
    auto t = delta_triple(l);
    CommandResult r;
    r.payload = delta_to_json(t);
    r.provenance_log.push_back({to_string(t.delta), provenance_name(t.provenance)});
    return r;
}

CommandResult cmd_cw_invariants(const std::string& arg, std::optional<int> truncation)
{
    auto x = complex_from_json(read_json_arg(arg));
    CommandResult r;
    r.payload = invariants_json(x, truncation);
    log_notes(r, x);
    return r;
}

CommandResult cmd_cw_smash(const std::string& a, const std::string& b, std::optional<int> truncation)
{
    auto x = complex_from_json(read_json_arg(a));
    auto y = complex_from_json(read_json_arg(b));
    auto s = smash(x, y);
    CommandResult r;
    r.payload = {{"complex", complex_to_json(s)}, {"invariants", invariants_json(s, truncation)}};
    log_notes(r, s);
    return r;
}

CommandResult cmd_obstruct_closed(const std::string& arg)
{
    auto j = read_json_arg(arg);
    if (!j.is_object()) throw ValidationError("closed: expected a JSON object");
    try {
        auto rep = check_closed(rat_field(j, "c1_sq"), j.at("sigma").get<std::int64_t>(),
                                j.at("bplus").get<std::int64_t>(),
                                j.value("bplus_inv", j.at("bplus").get<std::int64_t>()));
        CommandResult r;
        r.payload = closed_to_json(rep);
        r.provenance_log.push_back({to_string(rep.value), "computed"});
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("closed: malformed input: ") + e.what());
    }
}

CommandResult cmd_obstruct_cobordism(const std::string& arg)
{
    auto j = read_json_arg(arg);
    if (!j.is_object()) throw ValidationError("cobordism: expected a JSON object");
    json fields = j;
    // Signatures default to those of the given links.
    if (j.contains("L") && !j.contains("sigma_L")) fields["sigma_L"] = link_signature(link_from_json(j.at("L")));
    if (j.contains("Lp") && !j.contains("sigma_Lp"))
        fields["sigma_Lp"] = link_signature(link_from_json(j.at("Lp")));
    auto d = cobordism_from_json(fields);
    auto tl = triple_field(j, "L", "delta_L");
    auto tlp = triple_field(j, "Lp", "delta_Lp");

    CommandResult r;
    json payload;
    payload["homology"] = homology_to_json(branched_homology(d));
    if (d.c1_sq) payload["ineq1"] = report_to_json(check_ineq1(d, tl.delta, tlp.delta));
    if (d.spin) {
        auto form = j.value("hypothesis_form", std::string("half-b1")) == "genus" ? HypothesisForm::Genus
                                                                                   : HypothesisForm::HalfB1;
        if (tl.dbar && tl.dunder && tlp.dbar && tlp.dunder)
            payload["ineq2"] = report_to_json(check_ineq2_and_theoremB(d, tl, tlp, form));
        else
            r.provenance_log.push_back({"ineq2 skipped", "dbar/dunder unavailable for a connected sum"});
    }
    r.payload = payload;
    r.provenance_log.push_back({to_string(hypothesis_value(d)), "hypothesis"});
    return r;
}

CommandResult cmd_obstruct_unoriented(const std::string& arg)
{
    auto j = read_json_arg(arg);
    if (!j.is_object()) throw ValidationError("unoriented: expected a JSON object");
    try {
        std::int64_t sigma;
        Int det;
        Rat delta;
        bool mo;
        if (j.contains("knot")) {
            auto k = link_from_json(j.at("knot"));
            sigma = link_signature(k);
            det = link_determinant(k);
            delta = delta_triple(k).delta;
            mo = j.value("mo_delta_zero", mo_delta_zero_allowlisted(k));
        } else {
            sigma = j.at("sigma_K").get<std::int64_t>();
            det = Int(static_cast<long>(j.at("det_K").get<std::int64_t>()));
            delta = rat_field(j, "delta_K");
            mo = j.value("mo_delta_zero", false);
        }
        auto b = unoriented_bound(sigma, j.at("e").get<std::int64_t>(), delta, det, mo);
        CommandResult r;
        r.payload = unoriented_to_json(b);
        r.provenance_log.push_back({to_string(b.bound), b.strengthened ? "real Froyshov bound" : "classical bound"});
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("unoriented: malformed input: ") + e.what());
    }
}

CommandResult cmd_enumerate(const std::string& arg, const PairWindow& w, const std::string& mo, bool flip)
{
    auto k = link_from_json(read_json_arg(arg));
    std::optional<bool> flag;
    if (mo == "true") flag = true;
    else if (mo == "false") flag = false;
    else if (mo != "auto") throw ValidationError("--mo-delta-zero must be true, false or auto");
    auto region = classify_pairs(k, w, flag, flip ? -1 : 1);
    CommandResult r;
    r.text = render_grid(region);
    r.payload = region_to_json(region);
    r.payload["grid"] = r.text;
    r.provenance_log.push_back({to_string(region.delta), "delta"});
    return r;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s)
{
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            auto v = std::stoll(s);
            return {v, v};
        }
        return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ValidationError("malformed range '" + s + "' (expected a or a..b)");
    }
}

struct ReferenceRow {
    std::int64_t offset;
    const char* label;
    const char* dbar;
    const char* delta;
    const char* dunder;
};

// Reference values of the Montesinos table, compared against delta_triple.
const ReferenceRow kMontesinosReference[] = {
    {-1, "12k-1", "1/2", "1/2", "0"},
    {-5, "12k-5", "0", "0", "-1/2"},
    {1, "12k+1", "0", "0", "0"},
    {5, "12k+5", "1/2", "1/2", "1/2"},
};

CommandResult cmd_tables_montesinos(const std::string& krange)
{
    auto [k0, k1] = parse_range(krange);
    if (k0 < 1 || k1 < k0) throw ValidationError("montesinos table: need 1 <= k_min <= k_max");
    json rows = json::array();
    bool all_match = true;
    int pipeline_mismatches = 0;
    for (std::int64_t k = k0; k <= k1; ++k)
        for (const auto& ref : kMontesinosReference) {
            std::int64_t n = 12 * k + ref.offset;
            auto t = delta_triple(LinkDesc::montesinos236(n));
            bool match = to_string(*t.dbar) == ref.dbar && to_string(t.delta) == ref.delta
                         && to_string(*t.dunder) == ref.dunder;
            Rat pipeline = torus_delta_from_mubar(3, n);
            bool pipeline_match = pipeline == t.delta;
            all_match = all_match && match;
            if (!pipeline_match) ++pipeline_mismatches;
            rows.push_back({{"knot", "M(2,3," + std::to_string(n) + ")"},
                            {"row", ref.label},
                            {"k", k},
                            {"dbar", to_string(*t.dbar)},
                            {"delta", to_string(t.delta)},
                            {"dunder", to_string(*t.dunder)},
                            {"reference", {{"dbar", ref.dbar}, {"delta", ref.delta}, {"dunder", ref.dunder}}},
                            {"match", match},
                            {"mubar_pipeline", to_string(pipeline)},
                            {"mubar_pipeline_matches", pipeline_match}});
        }
    CommandResult r;
    r.payload = {{"rows", rows}, {"all_match", all_match}, {"mubar_pipeline_mismatches", pipeline_mismatches}};
    r.provenance_log.push_back({std::to_string(rows.size()) + " rows", "table"});
    return r;
}

CommandResult cmd_tables_brieskorn(std::int64_t max_pq)
{
    json rows = json::array();
    for (std::int64_t p = 3; p * (p + 2) <= max_pq; p += 2)
        for (std::int64_t q = p + 2; p * q <= max_pq; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            Rat m = mubar(SeifertData{{2, p, q}});
            rows.push_back({{"p", p},
                            {"q", q},
                            {"mubar", to_string(m)},
                            {"delta_torus", to_string(torus_delta_from_mubar(p, q))},
                            {"sigma_torus", link_signature(LinkDesc::torus(p, q))}});
        }
    CommandResult r;
    r.payload = {{"rows", rows}};
    r.provenance_log.push_back({std::to_string(rows.size()) + " rows", "computed"});
    return r;
}

void set_fallthrough(CLI::App* app)
{
    for (auto* sub : app->get_subcommands({})) {
        sub->fallthrough();
        set_fallthrough(sub);
    }
}

}  // namespace

json envelope(const CommandResult& r)
{
    json log = json::array();
    for (const auto& [value, source] : r.provenance_log) log.push_back({value, source});
    return {{"status", r.status}, {"payload", r.payload}, {"provenance_log", log}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Real Froyshov invariants, equivariant d-invariants and surface obstructions", "rsf"};
    bool as_json = false;
    int truncation = -1;
    app.add_flag("--json", as_json, "Print the full result envelope");
    app.add_option("--truncation", truncation, "Degree bound for Borel cohomology");
    app.require_subcommand(1);

    std::string a1, a2;
    auto* signature = app.add_subcommand("signature", "Signature of a link");
    signature->add_option("link", a1, "Link JSON or file")->required();
    auto* determinant = app.add_subcommand("determinant", "Determinant of a link");
    determinant->add_option("link", a1, "Link JSON or file")->required();
    auto* mub = app.add_subcommand("mubar", "Neumann-Siebenmann invariant of a Seifert homology sphere");
    mub->add_option("seifert", a1, "Seifert JSON or file")->required();
    auto* delta = app.add_subcommand("delta", "Real Froyshov invariants of a link");
    delta->add_option("link", a1, "Link JSON or file")->required();

    auto* cw = app.add_subcommand("cw", "Equivariant CW complexes");
    cw->require_subcommand(1);
    auto* cw_inv = cw->add_subcommand("invariants", "d, or dbar and dunder, of a complex");
    cw_inv->add_option("complex", a1, "Complex JSON or file")->required();
    auto* cw_smash = cw->add_subcommand("smash", "Smash product of two complexes");
    cw_smash->add_option("first", a1, "Complex JSON or file")->required();
    cw_smash->add_option("second", a2, "Complex JSON or file")->required();

    auto* obstruct = app.add_subcommand("obstruct", "Evaluate Froyshov-type inequalities");
    obstruct->require_subcommand(1);
    auto* ob_closed = obstruct->add_subcommand("closed", "Closed manifold with an odd involution");
    ob_closed->add_option("data", a1, "JSON or file")->required();
    auto* ob_cob = obstruct->add_subcommand("cobordism", "Surface cobordism between links");
    ob_cob->add_option("data", a1, "JSON or file")->required();
    auto* ob_unor = obstruct->add_subcommand("unoriented", "First Betti number bound for surfaces in D4");
    ob_unor->add_option("data", a1, "JSON or file")->required();

    PairWindow window;
    bool flip = false;
    std::string mo = "auto";
    auto* enumerate = app.add_subcommand("enumerate", "Classify (e, h) pairs for surfaces bounded by a knot");
    enumerate->add_option("knot", a1, "Knot JSON or file")->required();
    enumerate->add_option("--e-min", window.e_min, "Smallest normal Euler number");
    enumerate->add_option("--e-max", window.e_max, "Largest normal Euler number");
    enumerate->add_option("--h-min", window.h_min, "Smallest first Betti number");
    enumerate->add_option("--h-max", window.h_max, "Largest first Betti number");
    enumerate->add_flag("--flip-euler-sign", flip, "Replace e by -e");
    enumerate->add_option("--mo-delta-zero", mo, "true, false or auto (allowlist)");

    auto* tables = app.add_subcommand("tables", "Regenerate reference tables");
    tables->require_subcommand(1);
    std::string krange = "1..4";
    auto* t_mont = tables->add_subcommand("montesinos", "Montesinos M(2,3,n) table");
    t_mont->add_option("--k", krange, "Range a..b of k");
    std::int64_t max_pq = 100;
    auto* t_bries = tables->add_subcommand("brieskorn", "mubar of Sigma(2,p,q) for odd p, q");
    t_bries->add_option("--max-pq", max_pq, "Largest product pq");

    set_fallthrough(&app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        std::string verb;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--truncation") ++i;
            else if (args[i].rfind("-", 0) != 0) {
                verb = args[i];
                break;
            }
        }
        if (!verb.empty() && app.get_subcommand_no_throw(verb) == nullptr)
            err << "error: unknown verb '" << verb << "'\n\n" << app.help();
        else
            err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    std::optional<int> trunc;
    if (truncation >= 0) trunc = truncation;

    CommandResult result;
    try {
        if (signature->parsed()) result = cmd_signature(a1);
        else if (determinant->parsed()) result = cmd_determinant(a1);
        else if (mub->parsed()) result = cmd_mubar(a1);
        else if (delta->parsed()) result = cmd_delta(a1);
        else if (cw_inv->parsed()) result = cmd_cw_invariants(a1, trunc);
        else if (cw_smash->parsed()) result = cmd_cw_smash(a1, a2, trunc);
        else if (ob_closed->parsed()) result = cmd_obstruct_closed(a1);
        else if (ob_cob->parsed()) result = cmd_obstruct_cobordism(a1);
        else if (ob_unor->parsed()) result = cmd_obstruct_unoriented(a1);
        else if (enumerate->parsed()) result = cmd_enumerate(a1, window, mo, flip);
        else if (t_mont->parsed()) result = cmd_tables_montesinos(krange);
        else if (t_bries->parsed()) result = cmd_tables_brieskorn(max_pq);
        else {
            err << app.help();
            return 2;
        }
    } catch (const ValidationError& e) {
        result.status = "validation-error";
        result.payload = {{"error", e.what()}};
    } catch (const UnsupportedError& e) {
        result.status = "unsupported";
        result.payload = {{"error", e.what()}};
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }

    if (as_json) out << envelope(result).dump(2) << "\n";
    else if (result.status != "ok") err << result.status << ": " << result.payload.at("error").get<std::string>() << "\n";
    else if (!result.text.empty()) out << result.text;
    else out << result.payload.dump(2) << "\n";
    return result.status == "ok" ? 0 : 1;
}

}  // namespace rsf::cli
