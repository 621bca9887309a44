#include "tfc/dataset.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tfc/errors.hpp"

namespace tfc {

using nlohmann::json;

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TFC_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return TFC_DEFAULT_DATA_DIR;
}

namespace {

std::string where(std::size_t row) { return "row " + std::to_string(row) + ": "; }

Rat rat_field(const json& j, std::size_t row, const std::string& what) {
  try {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  } catch (const ParseError& e) {
    throw ParseError(where(row) + what + ": " + e.what());
  }
  throw ParseError(where(row) + what + " must be an exact integer or \"num/den\" string");
}

Int int_field(const json& j, std::size_t row, const std::string& what) {
  const Rat r = rat_field(j, row, what);
  if (r.get_den() != 1) throw ParseError(where(row) + what + " must be an integer");
  return r.get_num();
}

std::pair<Rat, Rat> pair_field(const json& row, std::size_t index, const char* key) {
  if (!row.contains(key)) throw ParseError(where(index) + "missing \"" + key + "\"");
  const json& p = row.at(key);
  if (!p.is_array() || p.size() != 2) throw ParseError(where(index) + "\"" + key + "\" must be [x, y]");
  return {rat_field(p[0], index, std::string(key) + ".x"), rat_field(p[1], index, std::string(key) + ".y")};
}

const json& rows_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc.at("rows").is_array()) {
    throw ParseError("dataset must be an object with a \"rows\" array");
  }
  return doc.at("rows");
}

std::string canonical_text(const CatalogEntry& e) {
  std::ostringstream os;
  os << e.id << '|';
  if (e.form) {
    os << "form|" << e.form->degree() << '|';
    for (const Int& c : e.form->coeffs()) os << c << ',';
  } else {
    os << "univariate|" << e.poly.degree() << '|';
    for (const Int& c : e.poly.coeffs()) os << c << ',';
  }
  return os.str();
}

}  // namespace

CurvePoint Table1Row::p() const { return CurvePoint::unchecked(CurveId::make(Family::E, m), px, py); }

CurvePoint Table1Row::pprime_printed() const {
  return CurvePoint::unchecked(CurveId::make(Family::Eprime, m), qx, qy);
}

CurvePoint Table1Row::pprime() const {
  return CurvePoint::unchecked(CurveId::make(Family::Eprime, m), qx, y_sign_erratum ? Rat(-qy) : qy);
}

CurvePoint GeneratorRow::point() const { return CurvePoint::unchecked(CurveId::make(Family::E, m), x, y); }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataMissingError("cannot read data file " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<Table1Row> parse_table1(const json& doc) {
  std::vector<Table1Row> out;
  const json& rows = rows_of(doc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& r = rows[i];
    if (!r.is_object() || !r.contains("m")) throw ParseError(where(i) + "missing \"m\"");
    Table1Row row;
    row.index = i;
    row.m = int_field(r.at("m"), i, "m");
    std::tie(row.px, row.py) = pair_field(r, i, "P");
    std::tie(row.qx, row.qy) = pair_field(r, i, "Pprime");
    if (r.contains("y_sign_erratum")) {
      if (!r.at("y_sign_erratum").is_boolean()) throw ParseError(where(i) + "y_sign_erratum must be boolean");
      row.y_sign_erratum = r.at("y_sign_erratum").get<bool>();
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Table1Row> load_table1(const std::filesystem::path& path) { return parse_table1(read_json_file(path)); }

std::vector<Table1Row> load_table1() { return load_table1(data_dir() / "table1.json"); }

std::vector<GeneratorRow> parse_generators(const json& doc) {
  std::vector<GeneratorRow> out;
  const json& rows = rows_of(doc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& r = rows[i];
    if (!r.is_object() || !r.contains("m")) throw ParseError(where(i) + "missing \"m\"");
    GeneratorRow row;
    row.index = i;
    row.m = int_field(r.at("m"), i, "m");
    std::tie(row.x, row.y) = pair_field(r, i, "P");
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<GeneratorRow> load_generators(const std::filesystem::path& path) {
  return parse_generators(read_json_file(path));
}

std::vector<GeneratorRow> generators_from(const std::vector<Table1Row>& rows) {
  std::vector<GeneratorRow> out;
  for (const auto& r : rows) out.push_back({r.index, r.m, r.px, r.py});
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

json export_polynomials() {
  json entries = json::array();
  std::string all;
  for (const auto& e : polynomial_catalog()) {
    json j;
    j["id"] = e.id;
    j["role"] = e.role;
    json coeffs = json::array();
    if (e.form) {
      j["kind"] = "form";
      j["degree"] = e.form->degree();
      for (const Int& c : e.form->coeffs()) coeffs.push_back(to_string(c));
      j["coefficients_by_u_exponent"] = coeffs;
    } else {
      j["kind"] = "univariate";
      j["degree"] = e.poly.degree();
      for (const Int& c : e.poly.coeffs()) coeffs.push_back(to_string(c));
      j["coefficients_constant_first"] = coeffs;
    }
    const std::string text = canonical_text(e);
    j["sha256"] = sha256_hex(text);
    all += text + '\n';
    entries.push_back(std::move(j));
  }
  json doc;
  doc["version"] = kPolynomialFormatVersion;
  doc["entries"] = std::move(entries);
  doc["sha256"] = sha256_hex(all);
  return doc;
}

std::vector<CatalogEntry> parse_polynomials(const json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc.contains("version")) {
    throw ParseError("polynomial file must have \"version\" and \"entries\"");
  }
  if (doc.at("version") != kPolynomialFormatVersion) {
    throw ParseError("unsupported polynomial file version " + doc.at("version").dump());
  }
  std::vector<CatalogEntry> out;
  std::string all;
  const json& entries = doc.at("entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& j = entries[i];
    try {
      CatalogEntry e;
      e.id = j.at("id").get<std::string>();
      e.role = j.value("role", "");
      const std::string kind = j.at("kind").get<std::string>();
      std::vector<Int> c;
      const char* key = kind == "form" ? "coefficients_by_u_exponent" : "coefficients_constant_first";
      for (const auto& x : j.at(key)) c.push_back(parse_int(x.get<std::string>()));
      if (kind == "form") {
        const auto degree = j.at("degree").get<unsigned>();
        e.form = HomogPoly(degree, c);
        e.poly = e.form->at_v1();
      } else if (kind == "univariate") {
        e.poly = IntPoly(c);
      } else {
        throw ParseError("unknown kind '" + kind + "'");
      }
      const std::string text = canonical_text(e);
      if (sha256_hex(text) != j.at("sha256").get<std::string>()) throw ParseError("checksum mismatch for " + e.id);
      all += text + '\n';
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw ParseError("entry " + std::to_string(i) + ": " + ex.what());
    } catch (const ArgumentError& ex) {
      throw ParseError("entry " + std::to_string(i) + ": " + ex.what());
    } catch (const ParseError& ex) {
      throw ParseError("entry " + std::to_string(i) + ": " + ex.what());
    }
  }
  if (doc.contains("sha256") && doc.at("sha256").get<std::string>() != sha256_hex(all)) {
    throw ParseError("polynomial file digest mismatch");
  }
  return out;
}

std::vector<CatalogEntry> load_polynomials(const std::filesystem::path& path) {
  return parse_polynomials(read_json_file(path));
}

std::vector<CatalogEntry> load_polynomials() { return load_polynomials(data_dir() / "polynomials.json"); }

}  // namespace tfc
