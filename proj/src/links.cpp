#include "rsf/links.hpp"

#include "diagram.hpp"
#include "rsf/errors.hpp"

#include <numeric>
#include <sstream>

namespace rsf {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t to_i64(const Int& z)
{
    if (!z.fits_slong_p()) throw InternalError("integer out of 64-bit range");
    return z.get_si();
}

}  // namespace

LinkDesc LinkDesc::unknot() { return LinkDesc{}; }

LinkDesc LinkDesc::torus(std::int64_t p, std::int64_t q)
{
    LinkDesc l;
    l.kind = Kind::Torus;
    l.p = p;
    l.q = q;
    return l;
}

LinkDesc LinkDesc::two_bridge(std::int64_t p, std::int64_t q)
{
    LinkDesc l;
    l.kind = Kind::TwoBridge;
    l.p = p;
    l.q = q;
    return l;
}

LinkDesc LinkDesc::montesinos236(std::int64_t n)
{
    LinkDesc l;
    l.kind = Kind::Montesinos236;
    l.n = n;
    return l;
}

LinkDesc LinkDesc::seifert(IntMatrix v)
{
    LinkDesc l;
    l.kind = Kind::SeifertMatrix;
    l.matrix = std::move(v);
    return l;
}

LinkDesc LinkDesc::goeritz(IntMatrix g, std::int64_t correction)
{
    LinkDesc l;
    l.kind = Kind::GoeritzMatrix;
    l.matrix = std::move(g);
    l.correction = correction;
    return l;
}

LinkDesc LinkDesc::sum(std::vector<LinkDesc> parts)
{
    LinkDesc l;
    l.kind = Kind::ConnectedSum;
    l.parts = std::move(parts);
    return l;
}

LinkDesc LinkDesc::mirror(LinkDesc inner)
{
    LinkDesc l;
    l.kind = Kind::Mirror;
    l.parts.push_back(std::move(inner));
    return l;
}

void validate(const LinkDesc& l)
{
    using K = LinkDesc::Kind;
    switch (l.kind) {
    case K::Unknot:
        return;
    case K::Torus:
        if (l.p < 2 || l.q < 2)
            throw ValidationError("torus: parameters must be >= 2, got " + describe(l));
        if (gcd64(l.p, l.q) != 1)
            throw ValidationError("torus: parameters must be coprime, got " + describe(l));
        return;
    case K::TwoBridge:
        if (l.p == 1 && l.q == 0) return;
        if (l.p < 1 || l.p % 2 == 0)
            throw ValidationError("twobridge: p must be odd and positive, got " + describe(l));
        if (l.q <= 0 || l.q >= l.p || gcd64(l.p, l.q) != 1)
            throw ValidationError("twobridge: need 0 < q < p with gcd(p,q) = 1, got " + describe(l));
        return;
    case K::Montesinos236: {
        std::int64_t r = ((l.n % 6) + 6) % 6;
        if (l.n < 5 || (r != 1 && r != 5))
            throw ValidationError("montesinos: need n = +-1 mod 6 and n >= 5, got " + describe(l));
        return;
    }
    case K::SeifertMatrix:
        for (const auto& row : l.matrix)
            if (row.size() != l.matrix.size())
                throw ValidationError("seifert: matrix is not square");
        return;
    case K::GoeritzMatrix:
        IntSymForm(l.matrix);
        return;
    case K::ConnectedSum:
        for (const auto& part : l.parts) validate(part);
        return;
    case K::Mirror:
        if (l.parts.size() != 1) throw ValidationError("mirror: exactly one link expected");
        validate(l.parts[0]);
        return;
    }
}

namespace links_detail {

IntSymForm symmetrize(const IntMatrix& v)
{
    const std::size_t n = v.size();
    IntMatrix s(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = v[i][j] + v[j][i];
    return IntSymForm(std::move(s));
}

IntMatrix torus_seifert_matrix(std::int64_t p, std::int64_t q)
{
    // Braid word (s_1 ... s_{p-1})^q; generators are positive.
    std::vector<std::int64_t> x;
    for (std::int64_t r = 0; r < q; ++r)
        for (std::int64_t g = 1; g < p; ++g) x.push_back(g);
    const std::size_t len = x.size();
    auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };

    // h[j]: next position with the same generator, or 0.
    std::vector<std::size_t> h(len, 0);
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t k = j + 1; k < len; ++k)
            if (abs64(x[k]) == abs64(x[j])) { h[j] = k; break; }

    IntMatrix a(len, std::vector<std::int64_t>(len, 0));
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t hi = h[i];
        if (hi == 0) continue;
        keep.push_back(i);
        for (std::size_t j = i; j < len; ++j) {
            if (i == j) {
                std::int64_t s = x[i] + x[hi];
                a[i][i] = s > 0 ? -1 : (s < 0 ? 1 : 0);
            } else if (hi > h[j] || hi < j) {
                // nested or disjoint generators do not link
            } else if (hi == j) {
                if (x[j] > 0) a[i][j] = 1;
                else a[j][i] = -1;
            } else if (abs64(x[i]) - abs64(x[j]) == 1) {
                a[j][i] = -1;
            } else if (abs64(x[j]) - abs64(x[i]) == 1) {
                a[i][j] = 1;
            }
        }
    }
    IntMatrix v(keep.size(), std::vector<std::int64_t>(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) v[r][c] = a[keep[r]][keep[c]];
    return v;
}

std::int64_t torus_signature_count(std::int64_t p, std::int64_t q)
{
    // Pairs with 1/2 < i/p + j/q < 3/2, i.e. pq < 2(iq + jp) < 3pq.
    std::int64_t inside = 0, outside = 0;
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = 1; j < q; ++j) {
            std::int64_t t = 2 * (i * q + j * p);
            if (t > p * q && t < 3 * p * q) ++inside;
            else ++outside;
        }
    // Global sign pinned by sigma(T(2,3)) = -2: for T(2,3) both pairs are inside.
    return outside - inside;
}

std::vector<std::int64_t> even_continued_fraction(std::int64_t p, std::int64_t q)
{
    if (p % 2 == 0) throw ValidationError("even continued fraction: p must be odd");
    std::int64_t qe = (q % 2 == 0) ? q : q - p;
    Rat x = make_rat(p, qe);
    std::vector<std::int64_t> terms;
    for (int guard = 0; guard < 10000; ++guard) {
        // The unique even integer a with |x - a| < 1.
        Int f = floor_rat(x);
        Int a = (f % 2 == 0) ? f : Int(f + 1);
        if (mpz_odd_p(f.get_mpz_t()) && x == Rat(f)) throw InternalError("even continued fraction: odd integer reached");
        terms.push_back(to_i64(a));
        Rat r = x - Rat(a);
        if (sgn(r) == 0) return terms;
        x = 1 / r;
    }
    throw InternalError("even continued fraction did not terminate");
}

IntMatrix two_bridge_seifert_matrix(std::int64_t p, std::int64_t q)
{
    auto terms = even_continued_fraction(p, q);
    const std::size_t n = terms.size();
    if (n % 2 != 0) throw InternalError("two-bridge knot: even continued fraction of odd length");
    IntMatrix v(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        v[i][i] = (i % 2 == 0) ? terms[i] / 2 : -terms[i] / 2;
        if (i + 1 < n) v[i][i + 1] = 1;
    }
    return v;
}

namespace {

// Regular continued fraction of p/q with positive terms and odd length.
std::vector<std::int64_t> odd_positive_continued_fraction(std::int64_t p, std::int64_t q)
{
    std::vector<std::int64_t> terms;
    std::int64_t a = p, b = q;
    while (b != 0) {
        terms.push_back(a / b);
        std::int64_t r = a % b;
        a = b;
        b = r;
    }
    if (terms.size() % 2 == 0) {
        if (terms.back() > 1) {
            terms.back() -= 1;
            terms.push_back(1);
        } else {
            terms.pop_back();
            terms.back() += 1;
        }
    }
    return terms;
}

int eta_convention();

GoeritzData goeritz_with(std::int64_t p, std::int64_t q, int white_colour, int eta_sign)
{
    auto d = diagram::plat_diagram(odd_positive_continued_fraction(p, q));
    auto g = diagram::goeritz(d, white_colour, eta_sign);
    GoeritzData out{g.form, g.mu, 0};
    out.signature = signature(g.form) - g.mu;
    return out;
}

// The incidence sign convention is fixed once by matching the trefoil K(3,1)
// against its Seifert-matrix signature.
int eta_convention()
{
    static const int sign = [] {
        const std::int64_t target = signature(symmetrize(two_bridge_seifert_matrix(3, 1)));
        for (int s : {1, -1})
            if (goeritz_with(3, 1, 0, s).signature == target
                && goeritz_with(3, 1, 1, s).signature == target)
                return s;
        throw InternalError("Goeritz convention: no incidence sign matches the trefoil");
    }();
    return sign;
}

}  // namespace

GoeritzData two_bridge_goeritz(std::int64_t p, std::int64_t q, int white_colour)
{
    return goeritz_with(p, q, white_colour, eta_convention());
}

}  // namespace links_detail

std::int64_t link_signature(const LinkDesc& l)
{
    using K = LinkDesc::Kind;
    validate(l);
    switch (l.kind) {
    case K::Unknot:
        return 0;
    case K::Torus:
        return links_detail::torus_signature_count(l.p, l.q);
    case K::TwoBridge:
        if (l.p == 1) return 0;
        return links_detail::two_bridge_goeritz(l.p, l.q).signature;
    case K::Montesinos236:
        throw UnsupportedError("signature of " + describe(l)
                               + " is not computed; supply a Seifert or Goeritz presentation");
    case K::SeifertMatrix:
        return signature(links_detail::symmetrize(l.matrix));
    case K::GoeritzMatrix:
        return signature(IntSymForm(l.matrix)) - l.correction;
    case K::ConnectedSum: {
        std::int64_t s = 0;
        for (const auto& part : l.parts) s += link_signature(part);
        return s;
    }
    case K::Mirror:
        return -link_signature(l.parts[0]);
    }
    throw InternalError("unreachable link kind");
}

Int link_determinant(const LinkDesc& l)
{
    using K = LinkDesc::Kind;
    validate(l);
    switch (l.kind) {
    case K::Unknot:
        return 1;
    case K::Torus:
        return abs(determinant(links_detail::symmetrize(links_detail::torus_seifert_matrix(l.p, l.q))));
    case K::TwoBridge:
        if (l.p == 1) return 1;
        return abs(determinant(links_detail::two_bridge_goeritz(l.p, l.q).form));
    case K::Montesinos236:
        // The branched double cover is the integral homology sphere Sigma(2,3,n).
        return 1;
    case K::SeifertMatrix:
        return abs(determinant(links_detail::symmetrize(l.matrix)));
    case K::GoeritzMatrix:
        return abs(determinant(IntSymForm(l.matrix)));
    case K::ConnectedSum: {
        Int d = 1;
        for (const auto& part : l.parts) d *= link_determinant(part);
        return d;
    }
    case K::Mirror:
        return link_determinant(l.parts[0]);
    }
    throw InternalError("unreachable link kind");
}

ClassicalInvariants classical_invariants(const LinkDesc& l)
{
    return {link_signature(l), link_determinant(l)};
}

std::string describe(const LinkDesc& l)
{
    using K = LinkDesc::Kind;
    std::ostringstream os;
    switch (l.kind) {
    case K::Unknot: os << "unknot"; break;
    case K::Torus: os << "T(" << l.p << "," << l.q << ")"; break;
    case K::TwoBridge: os << "K(" << l.p << "," << l.q << ")"; break;
    case K::Montesinos236: os << "M(2,3," << l.n << ")"; break;
    case K::SeifertMatrix: os << "seifert[" << l.matrix.size() << "x" << l.matrix.size() << "]"; break;
    case K::GoeritzMatrix: os << "goeritz[" << l.matrix.size() << "x" << l.matrix.size() << "]"; break;
    case K::ConnectedSum:
        os << "sum(";
        for (std::size_t i = 0; i < l.parts.size(); ++i) os << (i ? ", " : "") << describe(l.parts[i]);
        os << ")";
        break;
    case K::Mirror: os << "mirror(" << (l.parts.empty() ? "?" : describe(l.parts[0])) << ")"; break;
    }
    return os.str();
}

namespace {

IntMatrix matrix_from_json(const nlohmann::json& j, const char* what)
{
    if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array of rows");
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw ValidationError(std::string(what) + ": expected an array of rows");
        std::vector<std::int64_t> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw ValidationError(std::string(what) + ": entries must be integers");
            r.push_back(x.get<std::int64_t>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

std::pair<std::int64_t, std::int64_t> pair_from_json(const nlohmann::json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ValidationError(std::string(what) + ": expected [p, q] integers");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

LinkDesc link_from_json(const nlohmann::json& j)
{
    if (j.is_string() && j.get<std::string>() == "unknot") return LinkDesc::unknot();
    if (!j.is_object() || j.empty())
        throw ValidationError("link: expected a tagged object such as {\"torus\":[3,7]}");
    std::string marker;
    if (j.contains("orientation")) {
        if (!j["orientation"].is_string()) throw ValidationError("link: orientation must be a string");
        marker = j["orientation"].get<std::string>();
    }
    LinkDesc l;
    if (j.contains("unknot")) {
        l = LinkDesc::unknot();
    } else if (j.contains("torus")) {
        auto [p, q] = pair_from_json(j["torus"], "torus");
        l = LinkDesc::torus(p, q);
    } else if (j.contains("twobridge")) {
        auto [p, q] = pair_from_json(j["twobridge"], "twobridge");
        l = LinkDesc::two_bridge(p, q);
    } else if (j.contains("montesinos")) {
        const auto& m = j["montesinos"];
        if (m.is_number_integer()) {
            l = LinkDesc::montesinos236(m.get<std::int64_t>());
        } else if (m.is_array() && m.size() == 3 && m[0] == 2 && m[1] == 3 && m[2].is_number_integer()) {
            l = LinkDesc::montesinos236(m[2].get<std::int64_t>());
        } else {
            throw ValidationError("montesinos: expected n or [2,3,n]");
        }
    } else if (j.contains("seifert")) {
        l = LinkDesc::seifert(matrix_from_json(j["seifert"], "seifert"));
    } else if (j.contains("goeritz")) {
        const auto& g = j["goeritz"];
        if (g.is_object()) {
            std::int64_t corr = 0;
            if (g.contains("correction")) {
                if (!g["correction"].is_number_integer()) throw ValidationError("goeritz: correction must be an integer");
                corr = g["correction"].get<std::int64_t>();
            }
            if (!g.contains("form")) throw ValidationError("goeritz: missing \"form\"");
            l = LinkDesc::goeritz(matrix_from_json(g["form"], "goeritz"), corr);
        } else {
            l = LinkDesc::goeritz(matrix_from_json(g, "goeritz"), 0);
        }
    } else if (j.contains("sum")) {
        if (!j["sum"].is_array()) throw ValidationError("sum: expected an array of links");
        std::vector<LinkDesc> parts;
        for (const auto& x : j["sum"]) parts.push_back(link_from_json(x));
        l = LinkDesc::sum(std::move(parts));
    } else if (j.contains("mirror")) {
        l = LinkDesc::mirror(link_from_json(j["mirror"]));
    } else {
        throw ValidationError("link: unknown tag in " + j.dump());
    }
    l.orientation_marker = marker;
    validate(l);
    return l;
}

nlohmann::json link_to_json(const LinkDesc& l)
{
    using K = LinkDesc::Kind;
    nlohmann::json j;
    switch (l.kind) {
    case K::Unknot: j = {{"unknot", true}}; break;
    case K::Torus: j = {{"torus", {l.p, l.q}}}; break;
    case K::TwoBridge: j = {{"twobridge", {l.p, l.q}}}; break;
    case K::Montesinos236: j = {{"montesinos", {2, 3, l.n}}}; break;
    case K::SeifertMatrix: j = {{"seifert", l.matrix}}; break;
    case K::GoeritzMatrix: j = {{"goeritz", {{"form", l.matrix}, {"correction", l.correction}}}}; break;
    case K::ConnectedSum: {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& p : l.parts) parts.push_back(link_to_json(p));
        j = {{"sum", parts}};
        break;
    }
    case K::Mirror: j = {{"mirror", link_to_json(l.parts[0])}}; break;
    }
    if (!l.orientation_marker.empty()) j["orientation"] = l.orientation_marker;
    return j;
}

}  // namespace rsf
