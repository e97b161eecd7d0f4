#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "grcyc/plucker.hpp"
#include "grcyc/rowmotion.hpp"
#include "grcyc/tableau.hpp"

namespace grcyc::app {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv };

/// Raised for malformed input documents and arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// "RE" or "RE,IM".
Complex parse_complex(std::string_view text);

/// {"k","n","rows":[[[re,im],...],...]}
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);

/// {"k","n","pluckers":{"1,2":[re,im],...}} in canonical form.
Json point_to_json(const PluckerVector& p);
PluckerVector point_from_json(const Json& j);

/// Accepts a point document or a matrix document.
PluckerVector point_or_matrix_from_json(const Json& j);

/// {"rows":[[...],...],"n":N}
Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

/// {"k","n","q":[re,im],"values":[[[re,im],...],...]}, rows r = 1..k.
Json labels_to_json(const PosetLabeling& x);
PosetLabeling labels_from_json(const Json& j, int k, int n, Complex q);

Json read_json_file(const std::filesystem::path& path);

/// Pretty JSON, or "path,value" lines with one line per leaf.
std::string render(const Json& doc, OutputFormat format);

}  // namespace grcyc::app
