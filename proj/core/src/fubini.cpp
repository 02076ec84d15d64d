#include <cmath>
#include <numeric>

#include "curvcalc/curvature.hpp"
#include "curvcalc/error.hpp"
#include "curvcalc/pushforward.hpp"
#include "local_star.hpp"

namespace curvcalc {

namespace {

Rational signed_term(const Rational& value, std::size_t dimension) {
  return dimension % 2 == 0 ? value : Rational(-value);
}

std::uint64_t multi_index_hash(std::span<const VertexId> vertex) {
  std::uint64_t h = 1469598103934665603ull;
  for (VertexId v : vertex) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h & ((std::uint64_t{1} << 48) - 1);
}

Estimate multiply(const Estimate& a, const Estimate& b) {
  return {a.value * b.value,
          std::abs(a.value) * b.std_error + std::abs(b.value) * a.std_error + a.std_error * b.std_error};
}

}  // namespace

FubiniTriple fubini_chi(const ProductCellComplex& carrier, const ConstructibleFunction& s) {
  if (s.carrier_size() != carrier.size()) {
    throw Error(ErrorCode::kCarrierMismatch, "function does not live on this product");
  }
  const SimplicialComplex& first = carrier.factor(0);
  const std::size_t rest_size = carrier.size() / first.size();
  std::vector<std::size_t> rest_dims(rest_size, 0);
  if (carrier.factor_count() > 1) {
    std::vector<SimplicialComplex> rest_factors;
    for (std::size_t k = 1; k < carrier.factor_count(); ++k) rest_factors.push_back(carrier.factor(k));
    const ProductCellComplex rest(std::move(rest_factors));
    for (std::size_t r = 0; r < rest_size; ++r) rest_dims[r] = rest.dimension_of(r);
  }

  FubiniTriple out;
  out.direct = euler_integral(carrier, s);

  // First factor inside: a function on the remaining factors.
  std::vector<Rational> over_rest(rest_size, Rational(0));
  // Remaining factors inside: a function on the first factor.
  std::vector<Rational> over_first(first.size(), Rational(0));
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t r = 0; r < rest_size; ++r) {
      const Rational& value = s[i * rest_size + r];
      if (value == 0) continue;
      over_rest[r] += signed_term(value, first.dimension_of(i));
      over_first[i] += signed_term(value, rest_dims[r]);
    }
  }
  out.iterated_first = 0;
  for (std::size_t r = 0; r < rest_size; ++r) out.iterated_first += signed_term(over_rest[r], rest_dims[r]);
  out.iterated_rest = 0;
  for (std::size_t i = 0; i < first.size(); ++i) out.iterated_rest += signed_term(over_first[i], first.dimension_of(i));
  return out;
}

Estimate product_curvature(std::span<const Embedding> factors, std::span<const VertexId> vertex,
                           const SamplingOptions& sampling) {
  if (factors.empty() || vertex.size() != factors.size()) {
    throw Error(ErrorCode::kInvalidArgument, "need one vertex per factor");
  }
  if (sampling.samples == 0) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");

  struct FactorData {
    detail::LocalStar star;
    Eigen::MatrixXd diffs;
    Eigen::Index offset;
    // Dimension of each option: option 0 is the vertex itself.
    std::vector<std::size_t> option_dims;
  };
  std::vector<FactorData> data;
  Eigen::Index total_dim = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Embedding& e = factors[k];
    e.complex().require_vertex(vertex[k]);
    FactorData d{detail::LocalStar::build(e.complex(), vertex[k]), {}, total_dim, {0}};
    const Eigen::Index n = static_cast<Eigen::Index>(d.star.neighbors.size());
    d.diffs.resize(n, e.ambient_dimension());
    for (Eigen::Index j = 0; j < n; ++j) {
      d.diffs.row(j) = e.coordinates().row(vertex[k]) - e.coordinates().row(d.star.neighbors[j]);
    }
    for (const auto& c : d.star.cofaces) d.option_dims.push_back(c.dimension);
    total_dim += e.ambient_dimension();
    data.push_back(std::move(d));
  }

  // Product cells containing the vertex, row-major over the factor options.
  std::size_t cell_count = 1;
  for (const FactorData& d : data) cell_count *= d.option_dims.size();
  std::vector<std::size_t> cell_dims(cell_count, 0);
  for (std::size_t c = 0; c < cell_count; ++c) {
    std::size_t rem = c;
    for (std::size_t k = data.size(); k-- > 0;) {
      cell_dims[c] += data[k].option_dims[rem % data[k].option_dims.size()];
      rem /= data[k].option_dims.size();
    }
  }

  std::vector<std::size_t> hits(cell_count, 0);
  std::vector<std::vector<char>> covered(data.size());
  std::vector<char> flags;
  std::vector<char> inside(cell_count);
  DirectionSampler sampler(total_dim, sampling.seed, stream_id(StreamTag::kProduct, multi_index_hash(vertex)));
  sampler.run(sampling.samples, [&](const Eigen::VectorXd& xi) {
    for (std::size_t k = 0; k < data.size(); ++k) {
      const FactorData& d = data[k];
      const Eigen::VectorXd dots = d.diffs * xi.segment(d.offset, d.diffs.cols());
      flags.assign(static_cast<std::size_t>(dots.size()), 0);
      for (Eigen::Index j = 0; j < dots.size(); ++j) {
        if (dots[j] == 0.0) return false;
        flags[static_cast<std::size_t>(j)] = dots[j] > 0.0;
      }
      covered[k].assign(d.option_dims.size(), 1);
      for (std::size_t c = 0; c < d.star.cofaces.size(); ++c) {
        covered[k][c + 1] = d.star.covered(d.star.cofaces[c], flags);
      }
    }
    for (std::size_t c = 0; c < cell_count; ++c) {
      std::size_t rem = c;
      bool in = true;
      for (std::size_t k = data.size(); k-- > 0 && in;) {
        in = covered[k][rem % covered[k].size()] != 0;
        rem /= covered[k].size();
      }
      if (in) ++hits[c];
    }
    return true;
  });

  Estimate out;
  const double n = static_cast<double>(sampling.samples);
  for (std::size_t c = 0; c < cell_count; ++c) {
    const double e = static_cast<double>(hits[c]) / n;
    out.value += cell_dims[c] % 2 == 0 ? e : -e;
    out.std_error += binomial_std_error(hits[c], sampling.samples);
  }
  return out;
}

std::vector<ProductCurvatureRow> fubini_curvature(std::span<const Embedding> factors,
                                                  const SamplingOptions& sampling) {
  if (factors.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one factor");
  bool exact = true;
  for (const Embedding& e : factors) exact = exact && e.ambient_dimension() <= 3;
  const Method method = exact ? Method::kExact : Method::kMonteCarlo;

  std::vector<CurvatureMeasure> factor_measures;
  for (const Embedding& e : factors) factor_measures.push_back(banchoff_measure(e, method, sampling));

  std::vector<ProductCurvatureRow> rows;
  for (const CurvatureMeasure& m : factor_measures) {
    if (m.atoms.empty()) return rows;
  }
  std::vector<std::size_t> pos(factors.size(), 0);
  while (true) {
    ProductCurvatureRow row;
    row.factors = {1.0, 0.0};
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const VertexAtom& atom = factor_measures[k].atoms[pos[k]];
      row.vertex.push_back(atom.vertex);
      row.factors = multiply(row.factors, atom.kappa);
    }
    row.product = product_curvature(factors, row.vertex, sampling);
    row.joint_error = std::hypot(row.product.std_error, row.factors.std_error);
    rows.push_back(std::move(row));

    std::size_t k = factors.size();
    while (k-- > 0) {
      if (++pos[k] < factor_measures[k].atoms.size()) break;
      pos[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return rows;
}

}  // namespace curvcalc
