#ifndef FZETA_SERIALIZE_HPP
#define FZETA_SERIALIZE_HPP

#include "fzeta/certificate.hpp"
#include "fzeta/curve.hpp"
#include "fzeta/groupzeta.hpp"
#include "fzeta/numfield.hpp"
#include "fzeta/purezeta.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace fzeta {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const Poly& p); // array of "num/den" strings, index = degree
Json to_json(const RationalFunction& f);
Json to_json(const Certificate& c);
Json to_json(const RHReport& r);
Json to_json(const GroupZetaResult& z, const Certificate& fe, const GroupZeroReport& zeros);
Json to_json(const VolumeTable& t);
Json to_json(const std::vector<KSProbeRow>& rows);

// Parsers throw ConfigError naming the offending field (JSON pointer relative to `where`).
Rational rational_from_json(const Json& j, const std::string& where);
Poly poly_from_json(const Json& j, const std::string& where);
CurveData curve_from_json(const Json& j, const std::string& where = "");
PureZetaInputs pure_inputs_from_json(const Json& j, const std::string& where = "");

struct GroupSpec {
    char type = 'A';
    int rank = 1;
    int p = 1;
};
GroupSpec group_spec_from_json(const Json& j, const std::string& where = "");

Json read_json_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

struct ZeroRow {
    double re_s = 0;
    double im_s = 0;
    double modulus_u = 0;
    double deviation = 0;
};

std::vector<ZeroRow> zero_rows(const GroupZeroReport& r);
// Roots T of a pure-zeta numerator with T = q^{-r s}.
std::vector<ZeroRow> zero_rows(const RHReport& r, const Integer& q, int rank);

// Sorted by im_s then re_s; header re_s,im_s,modulus_u,deviation.
std::string zeros_csv(std::vector<ZeroRow> rows);
void emit_zero_plot_data(const std::vector<ZeroRow>& rows, const std::filesystem::path& path);

} // namespace fzeta

#endif
