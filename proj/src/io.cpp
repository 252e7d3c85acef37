#include "framekit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace framekit {

namespace {

template <FieldScalar Scalar>
json frame_vectors(const Frame<Scalar>& f) {
  json out = json::array();
  for (Index i = 0; i < f.size(); ++i) out.push_back(vector_json<Scalar>(f.vector(i)));
  return out;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

template <FieldScalar Scalar>
Scalar scalar_from_json(const json& j) {
  if constexpr (std::same_as<Scalar, double>) {
    return number(j, "real entry");
  } else {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw parse_error("complex entry must be [re, im]");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
  }
}

template <FieldScalar Scalar>
Frame<Scalar> frame_from_vectors(const json& vectors, Index n) {
  Matrix<Scalar> m(n, static_cast<Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Index>(i)) = vector_from_json<Scalar>(vectors[i], n);
  return Frame<Scalar>(std::move(m));
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Field frame_field(const AnyFrame& f) {
  return std::holds_alternative<Frame<double>>(f) ? Field::real : Field::complex;
}

json to_json(const FrameDocument& doc) {
  json j;
  j["field"] = std::string(to_string(frame_field(doc.frame)));
  std::visit(
      [&](const auto& f) {
        j["n"] = f.dim();
        j["vectors"] = frame_vectors(f);
      },
      doc.frame);
  if (doc.name) j["name"] = *doc.name;
  if (doc.seed) j["seed"] = *doc.seed;
  if (doc.construction) j["construction"] = *doc.construction;
  return j;
}

FrameDocument frame_document_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("frame document must be a JSON object");
  for (const char* key : {"field", "n", "vectors"})
    if (!j.contains(key)) throw parse_error(std::string("frame document is missing \"") + key + "\"");
  if (!j["field"].is_string()) throw parse_error("\"field\" must be \"real\" or \"complex\"");
  const std::string field = j["field"].get<std::string>();
  if (field != "real" && field != "complex") throw parse_error("\"field\" must be \"real\" or \"complex\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw parse_error("\"n\" must be a positive integer");
  const Index n = j["n"].get<Index>();
  const json& vectors = j["vectors"];
  if (!vectors.is_array() || vectors.empty()) throw parse_error("\"vectors\" must be a non-empty array");

  FrameDocument doc{field == "real" ? AnyFrame(frame_from_vectors<double>(vectors, n))
                                    : AnyFrame(frame_from_vectors<cdouble>(vectors, n)),
                    std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw parse_error("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw parse_error("\"seed\" must be a nonnegative integer");
    doc.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("construction")) doc.construction = j["construction"];
  return doc;
}

std::string write_frame(const FrameDocument& doc) { return to_json(doc).dump(2) + "\n"; }

FrameDocument read_frame(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return frame_document_from_json(j);
}

FrameDocument read_frame_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_frame(buf.str());
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view cell) {
  cell = trim(cell);
  double x = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), x);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
    throw parse_error("not a number: \"" + std::string(cell) + "\"");
  return x;
}

template <FieldScalar Scalar>
std::string matrix_to_csv(const Matrix<Scalar>& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      if constexpr (std::same_as<Scalar, double>) {
        out += format_double(m(i, j));
      } else {
        out += format_double(m(i, j).real());
        out += ',';
        out += format_double(m(i, j).imag());
      }
    }
    out += '\n';
  }
  return out;
}

template <FieldScalar Scalar>
Matrix<Scalar> matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  for (std::string_view line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (std::string_view cell : split(line, ',')) row.push_back(parse_double(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("empty CSV matrix");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) throw parse_error("ragged CSV matrix");

  constexpr std::size_t per_entry = std::same_as<Scalar, double> ? 1 : 2;
  if (width % per_entry != 0) throw parse_error("complex CSV rows need (re, im) column pairs");
  Matrix<Scalar> m(static_cast<Index>(rows.size()), static_cast<Index>(width / per_entry));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const auto& r = rows[static_cast<std::size_t>(i)];
      if constexpr (std::same_as<Scalar, double>)
        m(i, j) = r[static_cast<std::size_t>(j)];
      else
        m(i, j) = {r[static_cast<std::size_t>(2 * j)], r[static_cast<std::size_t>(2 * j + 1)]};
    }
  return m;
}

json scalar_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json scalar_json(cdouble x) { return json::array({scalar_json(x.real()), scalar_json(x.imag())}); }

template <FieldScalar Scalar>
json vector_json(const Vector<Scalar>& v) {
  json out = json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(scalar_json(v(k)));
  return out;
}

json real_vector_json(const VectorXd& v) { return vector_json<double>(v); }

template <FieldScalar Scalar>
Vector<Scalar> vector_from_json(const json& j, Index n) {
  if (!j.is_array()) throw parse_error("vector must be an array");
  if (static_cast<Index>(j.size()) != n)
    throw parse_error("vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
  Vector<Scalar> v(n);
  for (Index k = 0; k < n; ++k) v(k) = scalar_from_json<Scalar>(j[static_cast<std::size_t>(k)]);
  return v;
}

template std::string matrix_to_csv<double>(const Matrix<double>&);
template std::string matrix_to_csv<cdouble>(const Matrix<cdouble>&);
template Matrix<double> matrix_from_csv<double>(std::string_view);
template Matrix<cdouble> matrix_from_csv<cdouble>(std::string_view);
template json vector_json<double>(const Vector<double>&);
template json vector_json<cdouble>(const Vector<cdouble>&);
template Vector<double> vector_from_json<double>(const json&, Index);
template Vector<cdouble> vector_from_json<cdouble>(const json&, Index);

}  // namespace framekit
