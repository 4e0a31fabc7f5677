#pragma once

// Point configurations and their lineality spaces, and the passage from a
// homogeneous ideal to its point configuration A(I).

#include <string>
#include <vector>

#include "subinit/errors.hpp"
#include "subinit/groebner.hpp"
#include "subinit/linalg.hpp"

namespace subinit {

/// Labeled points a_e, one row per label. Rows may coincide.
struct PointConfiguration {
  std::vector<std::string> labels;
  RationalMatrix points;

  PointConfiguration() = default;
  PointConfiguration(std::vector<std::string> l, RationalMatrix p) : labels(std::move(l)), points(std::move(p)) {
    if (labels.size() != points.rows())
      throw DimensionError("point configuration has " + std::to_string(points.rows()) + " rows for " +
                           std::to_string(labels.size()) + " labels");
  }

  std::size_t size() const { return labels.size(); }
  std::size_t ambient_dimension() const { return points.cols(); }
  std::vector<Rational> point(std::size_t e) const { return points.row(e); }

  /// The matrix [1 | points].
  RationalMatrix homogenized() const {
    RationalMatrix m(size(), ambient_dimension() + 1);
    for (std::size_t e = 0; e < size(); ++e) {
      m(e, 0) = 1;
      for (std::size_t j = 0; j < ambient_dimension(); ++j) m(e, j + 1) = points(e, j);
    }
    return m;
  }
  /// Dimension of the affine span; -1 for the empty configuration.
  long affine_dimension() const { return static_cast<long>(rank(homogenized())) - 1; }
};

/// A subspace of Q^E given by linearly independent spanning vectors, stored
/// as the columns of `basis`.
struct SubspaceBasis {
  RationalMatrix basis;

  std::size_t ambient() const { return basis.rows(); }
  std::size_t dimension() const { return basis.cols(); }
  std::vector<Rational> vector(std::size_t i) const { return basis.column(i); }

  bool contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient()) throw DimensionError("vector length does not match the ambient space");
    return dimension() == 0 ? std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })
                            : solve(basis, v).has_value();
  }
  bool contains_ones() const { return contains(std::vector<Rational>(ambient(), 1)); }
  bool contains(const WeightVector& w) const { return contains(w.entries()); }

  bool same_span(const SubspaceBasis& o) const { return same_column_space(basis, o.basis); }
};

/// The matrix N whose rows are v1 - vj for every reduced Groebner basis
/// element with leading exponent v1 and further exponents vj. Its kernel is
/// the lineality space L(I).
inline RationalMatrix lineality_matrix(const Ideal& ideal) {
  std::size_t n = ideal.nvars();
  const auto& gb = ideal.groebner();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    const auto& lead = gb.leading_monomials()[k];
    for (const auto& t : gb.elements()[k].terms()) {
      if (t.monomial == lead) continue;
      std::vector<Rational> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = lead[i] - t.monomial[i];
      rows.push_back(std::move(r));
    }
  }
  return RationalMatrix::from_rows(rows, n);
}

inline void require_lineality_input(const Ideal& ideal) {
  if (!ideal.is_standard_homogeneous())
    throw PreconditionError("ideal must be homogeneous in the standard grading");
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has no point configuration");
}

inline SubspaceBasis lineality_space(const Ideal& ideal) {
  require_lineality_input(ideal);
  if (ideal.is_zero()) return {RationalMatrix::identity(ideal.nvars())};
  return {kernel_basis(lineality_matrix(ideal))};
}

/// A(I): row e holds the coordinates of a_e in the basis dual to the kernel
/// basis of N.
inline PointConfiguration point_configuration_of_ideal(const Ideal& ideal) {
  return PointConfiguration(ideal.labels(), lineality_space(ideal).basis);
}

/// L(A): restrictions of affine functions to A, the column space of [1 | A].
inline SubspaceBasis lineality_of_config(const PointConfiguration& a) {
  return {column_space_basis(a.homogenized())};
}

inline bool affine_equivalent(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.labels != b.labels) throw PreconditionError("configurations have different label sequences");
  return lineality_of_config(a).same_span(lineality_of_config(b));
}

/// Rows pi_L(e_i) of the orthogonal projector B (B^T B)^{-1} B^T.
inline PointConfiguration orthogonal_projection_config(const SubspaceBasis& l,
                                                       std::vector<std::string> labels = {}) {
  std::size_t n = l.ambient();
  if (labels.empty())
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw DimensionError("label count does not match the ambient space");
  if (l.dimension() == 0 || !l.contains_ones()) throw PreconditionError("subspace does not contain the all-ones vector");
  RationalMatrix bt = l.basis.transpose();
  auto gram_inv = inverse(bt * l.basis);
  if (!gram_inv) throw PreconditionError("subspace spanning vectors are linearly dependent");
  return PointConfiguration(std::move(labels), l.basis * *gram_inv * bt);
}

}  // namespace subinit
