#pragma once

#include <span>
#include <vector>

#include "curvcalc/complex.hpp"

namespace curvcalc {

/// Cartesian product kept as a cell complex: a cell is one simplex from each
/// factor and its open cell is the product of the open simplices. Cells are
/// indexed row-major over the factors' cell indices (first factor slowest).
///
/// Binary products are the common case; more factors are allowed so that a
/// cube can be written as segment x segment x segment.
class ProductCellComplex {
 public:
  explicit ProductCellComplex(std::vector<SimplicialComplex> factors);

  std::size_t factor_count() const { return factors_.size(); }
  const SimplicialComplex& factor(std::size_t k) const { return factors_[k]; }

  std::size_t size() const { return size_; }
  std::vector<std::size_t> cell(std::size_t index) const;
  std::size_t index_of(std::span<const std::size_t> components) const;
  /// Sum of the component dimensions.
  std::size_t dimension_of(std::size_t index) const;
  int dimension() const;
  long euler_characteristic() const;

  /// Indices of all cells whose components are faces of `index`'s components.
  std::vector<std::size_t> faces(std::size_t index) const;
  /// Cells all of whose components are vertices.
  std::vector<std::size_t> vertex_cells() const;

 private:
  std::vector<SimplicialComplex> factors_;
  std::size_t size_ = 1;
};

ProductCellComplex product(const SimplicialComplex& left, const SimplicialComplex& right);

}  // namespace curvcalc
