#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <string>

#include <json.hpp>

#include "framekit/frame.hpp"

namespace fk_test {

using framekit::cdouble;
using framekit::Index;
using nlohmann::json;

inline const json& oracles() {
  static const json doc = [] {
    std::ifstream in(std::string(FRAMEKIT_TEST_DATA) + "/oracles.json");
    return json::parse(in);
  }();
  return doc;
}

template <class S>
S scalar_from(const json& j) {
  if constexpr (std::same_as<S, double>)
    return j.get<double>();
  else
    return S(j[0].get<double>(), j[1].get<double>());
}

template <class S>
framekit::Matrix<S> matrix_from(const json& rows) {
  framekit::Matrix<S> m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = scalar_from<S>(rows[i][j]);
  return m;
}

// vectors stored one per row
template <class S>
framekit::Frame<S> frame_from(const json& vectors) {
  return framekit::Frame<S>(framekit::Matrix<S>(matrix_from<S>(vectors).transpose()));
}

inline framekit::VectorXd vector_from(const json& j) {
  framekit::VectorXd v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = j[i].get<double>();
  return v;
}

inline framekit::VectorXd sorted_desc(framekit::VectorXd v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<>());
  return v;
}

}  // namespace fk_test
