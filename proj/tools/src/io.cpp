#include "io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace grcyc::app {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw UsageError("expected a complex number [re, im], got " + j.dump());
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

namespace {

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("not a number: '" + std::string(text) + "'");
  return v;
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw UsageError(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return Complex(parse_double(text), 0.0);
  return Complex(parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1)));
}

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"k", a.rows()}, {"n", a.cols()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) throw UsageError("matrix document needs 'rows'");
  const auto& rows = j["rows"];
  const int k = j.contains("k") ? get_int(j, "k") : static_cast<int>(rows.size());
  if (rows.empty() || static_cast<int>(rows.size()) != k) throw UsageError("row count does not match k");
  const int n = j.contains("n") ? get_int(j, "n") : static_cast<int>(rows[0].size());
  Matrix a(k, n);
  for (int r = 0; r < k; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw UsageError("row length does not match n");
    for (int c = 0; c < n; ++c) a(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return a;
}

Json point_to_json(const PluckerVector& p) {
  Json coords = Json::object();
  const auto subsets = all_subsets(p.n(), p.k());
  for (std::size_t i = 0; i < subsets.size(); ++i) coords[subsets[i].to_string()] = to_json(p.at(i));
  return Json{{"k", p.k()}, {"n", p.n()}, {"pluckers", std::move(coords)}};
}

PluckerVector point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pluckers") || !j["pluckers"].is_object()) throw UsageError("point document needs 'pluckers'");
  const int k = get_int(j, "k");
  const int n = get_int(j, "n");
  if (k < 1 || n < k) throw UsageError("need 1 <= k <= n");
  std::vector<Complex> coords(static_cast<std::size_t>(binomial(n, k)), Complex(0.0, 0.0));
  for (const auto& [key, value] : j["pluckers"].items()) {
    Subset s = [&] {
      try {
        return Subset::parse(n, key);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }();
    if (s.size() != k) throw UsageError("subset '" + key + "' does not have k elements");
    coords[subset_rank(s)] = complex_from_json(value);
  }
  return PluckerVector(k, n, std::move(coords));
}

PluckerVector point_or_matrix_from_json(const Json& j) {
  if (j.is_object() && j.contains("pluckers")) return point_from_json(j);
  return plucker_from_matrix(matrix_from_json(j));
}

Json tableau_to_json(const Tableau& t) { return Json{{"rows", t.entries()}, {"n", t.n()}}; }

Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) throw UsageError("tableau document needs 'rows'");
  try {
    return Tableau(j["rows"].get<std::vector<std::vector<int>>>(), get_int(j, "n"));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad tableau rows: ") + e.what());
  }
}

Json labels_to_json(const PosetLabeling& x) {
  Json rows = Json::array();
  const int cols = x.n - x.k;
  for (int r = 1; r <= x.k; ++r) {
    Json row = Json::array();
    for (int s = 1; s <= cols; ++s) row.push_back(to_json(x.values[poset_index(x.k, x.n, r, s)]));
    rows.push_back(std::move(row));
  }
  return Json{{"k", x.k}, {"n", x.n}, {"q", to_json(x.q)}, {"values", std::move(rows)}};
}

PosetLabeling labels_from_json(const Json& j, int k, int n, Complex q) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) throw UsageError("labels document needs 'values'");
  if (j.contains("k") && get_int(j, "k") != k) throw UsageError("labels k disagrees with --k");
  if (j.contains("n") && get_int(j, "n") != n) throw UsageError("labels n disagrees with --n");
  const auto& rows = j["values"];
  const int cols = n - k;
  if (static_cast<int>(rows.size()) != k) throw UsageError("labels need k rows");
  PosetLabeling x{k, n, std::vector<Complex>(static_cast<std::size_t>(k * cols)), q};
  for (int r = 1; r <= k; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw UsageError("labels rows need n-k entries");
    for (int s = 1; s <= cols; ++s) {
      const Complex v = complex_from_json(row[static_cast<std::size_t>(s - 1)]);
      if (v == Complex(0.0, 0.0)) throw UsageError("labels must be nonzero");
      x.values[poset_index(k, n, r, s)] = v;
    }
  }
  return x;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "/" + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), out);
  } else {
    std::string key = path;
    // Subset keys contain commas.
    if (key.find(',') != std::string::npos) key = "\"" + key + "\"";
    out << key << ',' << j.dump() << '\n';
  }
}

}  // namespace

std::string render(const Json& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";
  std::ostringstream out;
  out << "path,value\n";
  flatten(doc, "", out);
  return out.str();
}

}  // namespace grcyc::app
