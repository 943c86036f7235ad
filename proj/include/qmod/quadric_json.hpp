#pragma once

// JSON for matrices, binary forms, curves and quadrics. Field elements are
// written as strings.

#include "json.hpp"

#include "qmod/quadric_lab.hpp"

namespace qmod::quad {

template <Field F>
nlohmann::json matrix_json(const DenseMatrix<F>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Coefficients of s^d, s^(d-1) t, ..., t^d.
template <Field F>
nlohmann::json binary_form_json(const BinaryForm<F>& f) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& v : f.coeffs()) c.push_back(f.field().to_string(v));
  return c;
}

template <Field F>
nlohmann::json curve_json(const ParamCurve<F>& c) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& f : c.components()) comps.push_back(binary_form_json(f));
  return {{"r", c.r()}, {"degree", c.degree()}, {"components", std::move(comps)}};
}

template <Field F>
nlohmann::json quadric_json(const SymQuadric<F>& q) {
  return {{"size", q.size()}, {"matrix", matrix_json(q.matrix())}};
}

template <Field F>
nlohmann::json system_json(const QuadricSystem<F>& s) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& q : s.basis()) basis.push_back(matrix_json(q.matrix()));
  return {{"r", s.r()}, {"dimension", s.dimension()}, {"basis", std::move(basis)}};
}

}  // namespace qmod::quad
