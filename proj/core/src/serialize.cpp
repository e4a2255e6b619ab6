#include "fzeta/serialize.hpp"

#include "fzeta/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace fzeta {

namespace {

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& require(const Json& j, const std::string& where, const char* key)
{
    if (!j.is_object())
        throw ConfigError(where.empty() ? "/" : where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ConfigError(child(where, key), "missing field");
    return *it;
}

long integer_field(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ConfigError(where, "expected an integer");
    return j.get<long>();
}

Integer integer_value(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    const Rational r = rational_from_json(j, where);
    if (!is_integer(r))
        throw ConfigError(where, "expected an integer");
    return r.get_num();
}

Json number(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return x;
}

} // namespace

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const Poly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(to_string(c));
    return a;
}

Json to_json(const RationalFunction& f)
{
    return Json{{"var", var_name(f.var())}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const Certificate& c)
{
    return Json{{"passed", c.passed}, {"checked", c.checked}, {"failed", c.failed}};
}

Json to_json(const RHReport& r)
{
    Json roots = Json::array();
    for (std::size_t i = 0; i < r.roots.size(); ++i)
        roots.push_back(Json{{"root", {number(r.roots[i].real()), number(r.roots[i].imag())}},
                             {"multiplicity", r.multiplicities.empty() ? 1 : r.multiplicities[i]},
                             {"deviation", number(r.deviations.empty() ? 0.0 : r.deviations[i])}});
    return Json{{"polynomial", to_json(r.polynomial)},
                {"Q", to_json(r.Q)},
                {"verdict", r.passed ? "pass" : "fail"},
                {"exact", r.exact},
                {"tolerance", r.tolerance},
                {"max_deviation", number(r.max_deviation())},
                {"roots", roots}};
}

Json to_json(const GroupZetaResult& z, const Certificate& fe, const GroupZeroReport& zeros)
{
    Json norm = Json::array();
    for (const auto& [kh, m] : z.normalization)
        norm.push_back({kh.first, kh.second, m});
    Json zs = Json::array();
    for (const auto& r : zero_rows(zeros))
        zs.push_back(Json{{"re_s", number(r.re_s)},
                          {"im_s", number(r.im_s)},
                          {"modulus_u", number(r.modulus_u)},
                          {"deviation", number(r.deviation)}});
    return Json{{"group", z.group},
                {"q", z.q.get_str()},
                {"route", z.route},
                {"zeta", to_json(z.zeta)},
                {"c_p", to_json(z.c_p)},
                {"normalization", norm},
                {"fe", fe.passed},
                {"fe_certificate", to_json(fe)},
                {"rh", zeros.passed},
                {"max_deviation", number(zeros.max_deviation)},
                {"zeros_at_origin", zeros.zeros_at_origin},
                {"zeros", zs}};
}

Json to_json(const VolumeTable& t)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < t.ranks.size(); ++i)
        out[std::to_string(t.ranks[i])] = Json{{"siegel", number(t.siegel[i])}, {"moduli", number(t.moduli[i])}};
    return out;
}

Json to_json(const std::vector<KSProbeRow>& rows)
{
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(Json{{"convention", ks_convention_name(r.convention)},
                           {"block", volume_block_name(r.block)},
                           {"rhs", number(r.rhs)},
                           {"siegel", number(r.siegel)},
                           {"deviation", number(r.deviation)}});
    return out;
}

Rational rational_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw ConfigError(where, "expected a rational string \"num/den\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(where, e.what());
    }
}

Poly poly_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw ConfigError(where, "expected an array of coefficients");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(rational_from_json(j[i], child(where, i)));
    return Poly(std::move(c));
}

CurveData curve_from_json(const Json& j, const std::string& where)
{
    const long g = integer_field(require(j, where, "genus"), child(where, "genus"));
    if (g < 1)
        throw ConfigError(child(where, "genus"), "genus must be >= 1");
    const Integer q = integer_value(require(j, where, "q"), child(where, "q"));
    if (q < 2)
        throw ConfigError(child(where, "q"), "q must be >= 2");
    const bool has_counts = j.contains("point_counts");
    const bool has_coeffs = j.contains("numerator_coeffs");
    if (has_counts == has_coeffs)
        throw ConfigError(where.empty() ? "/" : where, "exactly one of point_counts, numerator_coeffs is required");
    try {
        if (has_counts) {
            const Json& a = j["point_counts"];
            const std::string at = child(where, "point_counts");
            if (!a.is_array())
                throw ConfigError(at, "expected an array");
            std::vector<Integer> counts;
            for (std::size_t i = 0; i < a.size(); ++i)
                counts.push_back(integer_value(a[i], child(at, i)));
            if (counts.size() < static_cast<std::size_t>(g))
                throw ConfigError(at, "need at least genus point counts");
            return CurveData::from_point_counts(static_cast<int>(g), q, counts);
        }
        const std::string at = child(where, "numerator_coeffs");
        Poly P = poly_from_json(j["numerator_coeffs"], at);
        const auto bad = weil_symmetry_violations(static_cast<int>(g), q, P);
        if (!bad.empty())
            throw ConfigError(at, bad.front());
        return CurveData::from_numerator(static_cast<int>(g), q, P);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(child(where, has_counts ? "point_counts" : "numerator_coeffs"), e.what());
    }
}

PureZetaInputs pure_inputs_from_json(const Json& j, const std::string& where)
{
    PureZetaInputs in;
    const long r = integer_field(require(j, where, "r"), child(where, "r"));
    if (r < 1)
        throw ConfigError(child(where, "r"), "r must be >= 1");
    in.r = static_cast<int>(r);
    const Json& a = require(j, where, "alphas");
    const std::string at = child(where, "alphas");
    if (!a.is_array())
        throw ConfigError(at, "expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
        in.alphas.push_back(rational_from_json(a[i], child(at, i)));
        if (in.alphas.back() < 0)
            throw ConfigError(child(at, i), "must be non-negative");
    }
    in.beta0 = rational_from_json(require(j, where, "beta0"), child(where, "beta0"));
    if (in.beta0 < 0)
        throw ConfigError(child(where, "beta0"), "must be non-negative");
    return in;
}

GroupSpec group_spec_from_json(const Json& j, const std::string& where)
{
    GroupSpec s;
    const Json& t = require(j, where, "type");
    if (!t.is_string() || t.get<std::string>().size() != 1)
        throw ConfigError(child(where, "type"), "expected one of \"A\", \"B\", \"C\", \"D\", \"G\"");
    s.type = t.get<std::string>()[0];
    s.rank = static_cast<int>(integer_field(require(j, where, "rank"), child(where, "rank")));
    s.p = static_cast<int>(integer_field(require(j, where, "p"), child(where, "p")));
    if (s.rank < 1)
        throw ConfigError(child(where, "rank"), "rank must be >= 1");
    if (s.p < 1 || s.p > s.rank)
        throw ConfigError(child(where, "p"), "p must lie in 1..rank");
    return s;
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path.string(), "cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError(path.string(), e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

std::vector<ZeroRow> zero_rows(const GroupZeroReport& r)
{
    std::vector<ZeroRow> out;
    for (const auto& z : r.zeros)
        for (int m = 0; m < z.multiplicity; ++m)
            out.push_back({z.re_s, z.im_s, z.modulus_u, z.deviation});
    return out;
}

std::vector<ZeroRow> zero_rows(const RHReport& r, const Integer& q, int rank)
{
    const double lq = std::log(q.get_d()) * rank;
    std::vector<ZeroRow> out;
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        const auto T = r.roots[i];
        const double mod = std::abs(T);
        // roots are already listed once per multiplicity
        out.push_back({-std::log(mod) / lq, -std::arg(T) / lq, mod, r.deviations.empty() ? 0.0 : r.deviations[i]});
    }
    return out;
}

std::string zeros_csv(std::vector<ZeroRow> rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const ZeroRow& a, const ZeroRow& b) {
        if (a.im_s != b.im_s)
            return a.im_s < b.im_s;
        return a.re_s < b.re_s;
    });
    std::ostringstream os;
    os.precision(17);
    os << "re_s,im_s,modulus_u,deviation\n";
    for (const auto& r : rows) {
        // Normalize negative zero so output is byte-stable.
        auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
        os << clean(r.re_s) << ',' << clean(r.im_s) << ',' << clean(r.modulus_u) << ',' << clean(r.deviation) << '\n';
    }
    return os.str();
}

void emit_zero_plot_data(const std::vector<ZeroRow>& rows, const std::filesystem::path& path)
{
    write_file_atomic(path, zeros_csv(rows));
}

} // namespace fzeta
