#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace curvcalc {

/// A float result with its standard error (0 for exact computations).
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

enum class Method { kExact, kMonteCarlo };

struct SamplingOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

/// Keeps independent consumers of one seed on disjoint streams.
enum class StreamTag : std::uint64_t {
  kExcessAngle = 1,
  kBanchoff = 2,
  kMorse = 3,
  kProduct = 4,
};

constexpr std::uint64_t stream_id(StreamTag tag, std::uint64_t local) {
  return (static_cast<std::uint64_t>(tag) << 48) ^ local;
}

/// Uniform directions on the unit sphere of R^dim, drawn as normalized
/// Gaussian vectors. Directions are produced in fixed-size batches and each
/// batch seeds its own engine from (seed, stream, batch index), so a batch's
/// contents never depend on how batches are scheduled.
class DirectionSampler {
 public:
  static constexpr std::size_t kBatchSize = 4096;

  DirectionSampler(Eigen::Index dim, std::uint64_t seed, std::uint64_t stream)
      : dim_(dim), seed_(seed), stream_(stream) {}

  /// Calls `accept(xi)` until it has returned true `count` times; a false
  /// return marks a tie and the direction is redrawn. Returns the number of
  /// redraws.
  template <class Accept>
  std::size_t run(std::size_t count, Accept&& accept) const {
    std::size_t redraws = 0;
    Eigen::VectorXd xi(dim_);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t batch = 0; batch * kBatchSize < count; ++batch) {
      std::mt19937_64 engine = batch_engine(batch);
      const std::size_t todo = std::min(kBatchSize, count - batch * kBatchSize);
      for (std::size_t done = 0; done < todo;) {
        double norm = 0.0;
        do {
          for (Eigen::Index k = 0; k < dim_; ++k) xi[k] = gauss(engine);
          norm = xi.norm();
        } while (norm == 0.0);
        xi /= norm;
        if (accept(static_cast<const Eigen::VectorXd&>(xi))) {
          ++done;
        } else {
          ++redraws;
        }
      }
    }
    return redraws;
  }

 private:
  std::mt19937_64 batch_engine(std::uint64_t batch) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    return std::mt19937_64(seq);
  }

  Eigen::Index dim_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

/// Binomial standard error of a hit fraction.
double binomial_std_error(std::size_t hits, std::size_t samples);

}  // namespace curvcalc
