#pragma once

// On-disk data: the Table 1 generators, generator lists for the appendix
// scan, and the polynomial catalog with checksums. Every number is stored
// as an exact decimal string ("a" or "a/b").

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfc/curve.hpp"
#include "tfc/poly_catalog.hpp"

namespace tfc {

// $TFC_DATA_DIR if set, else the data/ directory of the source tree.
std::filesystem::path data_dir();

struct Table1Row {
  std::size_t index = 0;  // 0-based position in the file
  Int m;
  Rat px, py;  // P on E
  Rat qx, qy;  // P' on E', as printed
  bool y_sign_erratum = false;

  // Built without the on-curve check so that bad data can be reported.
  CurvePoint p() const;
  CurvePoint pprime_printed() const;
  // P' with the erratum applied (y negated on flagged rows).
  CurvePoint pprime() const;
};

// A point on E used as a sequence generator.
struct GeneratorRow {
  std::size_t index = 0;
  Int m;
  Rat x, y;
  CurvePoint point() const;  // unchecked
};

std::vector<Table1Row> parse_table1(const nlohmann::json& doc);
// Throws DataMissingError if the file cannot be read, ParseError (with the
// row index) on malformed content.
std::vector<Table1Row> load_table1(const std::filesystem::path& path);
std::vector<Table1Row> load_table1();

// Same "rows" layout; only m and P are read.
std::vector<GeneratorRow> parse_generators(const nlohmann::json& doc);
std::vector<GeneratorRow> load_generators(const std::filesystem::path& path);
std::vector<GeneratorRow> generators_from(const std::vector<Table1Row>& rows);

nlohmann::json read_json_file(const std::filesystem::path& path);

std::string sha256_hex(const std::string& bytes);

// The catalog as a versioned document: each entry carries its coefficients
// and a SHA-256 of its canonical text, and the document a digest over all
// entries.
constexpr int kPolynomialFormatVersion = 1;
nlohmann::json export_polynomials();
// Throws ParseError on malformed content or a checksum mismatch.
std::vector<CatalogEntry> parse_polynomials(const nlohmann::json& doc);
std::vector<CatalogEntry> load_polynomials(const std::filesystem::path& path);
std::vector<CatalogEntry> load_polynomials();

}  // namespace tfc
