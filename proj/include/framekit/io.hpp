#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "framekit/constructions.hpp"

namespace framekit {

using json = nlohmann::json;

/// Malformed input: bad JSON, missing fields, ragged vectors, bad CSV cells.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrameDocument {
  AnyFrame frame;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  std::optional<json> construction;
};

Field frame_field(const AnyFrame& f);

// {"field", "n", "vectors": [[...], ...], "name"?, "seed"?, "construction"?}
// with complex entries as [re, im]. Doubles are written in shortest
// round-trip form so read(write(doc)) is bit-identical.
json to_json(const FrameDocument& doc);
FrameDocument frame_document_from_json(const json& j);

std::string write_frame(const FrameDocument& doc);
FrameDocument read_frame(std::string_view text);
FrameDocument read_frame_file(const std::filesystem::path& path);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);
double parse_double(std::string_view cell);

/// Row-major CSV, one matrix row per line; complex entries take two columns (re, im).
template <FieldScalar Scalar>
std::string matrix_to_csv(const Matrix<Scalar>& m);

template <FieldScalar Scalar>
Matrix<Scalar> matrix_from_csv(std::string_view text);

/// Scalars and vectors for reports: doubles stay doubles, complex as [re, im],
/// non-finite values as the strings "inf", "-inf", "nan".
json scalar_json(double x);
json scalar_json(cdouble x);

template <FieldScalar Scalar>
json vector_json(const Vector<Scalar>& v);

json real_vector_json(const VectorXd& v);

template <FieldScalar Scalar>
Vector<Scalar> vector_from_json(const json& j, Index n);

}  // namespace framekit
