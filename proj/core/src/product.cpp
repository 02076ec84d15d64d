#include "curvcalc/product.hpp"

#include "curvcalc/error.hpp"

namespace curvcalc {

ProductCellComplex::ProductCellComplex(std::vector<SimplicialComplex> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::kInvalidArgument, "a product needs at least one factor");
  for (const SimplicialComplex& f : factors_) size_ *= f.size();
}

std::vector<std::size_t> ProductCellComplex::cell(std::size_t index) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    out[k] = index % factors_[k].size();
    index /= factors_[k].size();
  }
  return out;
}

std::size_t ProductCellComplex::index_of(std::span<const std::size_t> components) const {
  if (components.size() != factors_.size()) {
    throw Error(ErrorCode::kForeignCell, "cell has the wrong number of components");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (components[k] >= factors_[k].size()) {
      throw Error(ErrorCode::kForeignCell, "cell component out of range");
    }
    index = index * factors_[k].size() + components[k];
  }
  return index;
}

std::size_t ProductCellComplex::dimension_of(std::size_t index) const {
  std::size_t dim = 0;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    dim += factors_[k].dimension_of(index % factors_[k].size());
    index /= factors_[k].size();
  }
  return dim;
}

int ProductCellComplex::dimension() const {
  int dim = 0;
  for (const SimplicialComplex& f : factors_) {
    if (f.empty()) return -1;
    dim += f.dimension();
  }
  return dim;
}

long ProductCellComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < size_; ++i) chi += alternating_sign(dimension_of(i));
  return chi;
}

std::vector<std::size_t> ProductCellComplex::faces(std::size_t index) const {
  const auto components = cell(index);
  std::vector<std::vector<std::size_t>> per_factor;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    std::vector<std::size_t> faces;
    for (const Simplex& f : factors_[k].simplex(components[k]).faces()) {
      faces.push_back(*factors_[k].index_of(f));
    }
    per_factor.push_back(std::move(faces));
  }
  std::vector<std::size_t> out{0};
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    std::vector<std::size_t> next;
    for (std::size_t prefix : out) {
      for (std::size_t f : per_factor[k]) next.push_back(prefix * factors_[k].size() + f);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> ProductCellComplex::vertex_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (dimension_of(i) == 0) out.push_back(i);
  }
  return out;
}

ProductCellComplex product(const SimplicialComplex& left, const SimplicialComplex& right) {
  return ProductCellComplex({left, right});
}

}  // namespace curvcalc
