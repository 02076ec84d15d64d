#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvcalc {

enum class EndKind { kPole, kBoundary, kPeriodic };

std::string_view to_string(EndKind kind);

/// Warping profile f of the surface of revolution dt^2 + f(t)^2 dtheta^2,
/// sampled on a uniform grid over [a, b]. A periodic profile identifies the
/// ends and its grid omits b.
class WarpFunction {
 public:
  struct Analytic {
    std::function<double(double)> f;
    std::function<double(double)> df;
    double a = 0.0;
    double b = 1.0;
    bool periodic = false;
  };

  /// Samples `points` grid points. Throws Error(kGridTooCoarse) below 5 and
  /// Error(kNegativeWarp) when f is negative, vanishes inside the interval,
  /// or vanishes at an end without growing inward.
  static WarpFunction sample(std::string name, const Analytic& profile, std::size_t points);
  /// Tabulated profile; end derivatives are estimated one-sidedly. Throws
  /// Error(kInvalidArgument) for a non-uniform or non-increasing grid.
  static WarpFunction tabulated(std::string name, std::vector<double> t, std::vector<double> f,
                                bool periodic = false);

  /// Built-in profiles: sphere, cylinder, cone, torus, paraboloid. Throws
  /// Error(kInvalidArgument) for an unknown name.
  static WarpFunction builtin(std::string_view name, std::size_t points);

  const std::string& name() const { return name_; }
  std::span<const double> t() const { return t_; }
  std::span<const double> values() const { return f_; }
  std::size_t size() const { return f_.size(); }
  double step() const { return h_; }
  double a() const { return a_; }
  double b() const { return b_; }
  bool periodic() const { return periodic_; }
  double derivative_a() const { return df_a_; }
  double derivative_b() const { return df_b_; }
  EndKind kind_a() const;
  EndKind kind_b() const;

  /// f'' on the grid: fourth-order central differences with one-sided
  /// stencils at the ends, or wrapped differences when periodic.
  std::vector<double> second_derivative() const;

 private:
  WarpFunction() = default;
  void validate();

  std::string name_;
  std::vector<double> t_;
  std::vector<double> f_;
  double h_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  bool periodic_ = false;
  double df_a_ = 0.0;
  double df_b_ = 0.0;
};

/// Parses "t,f" rows; blank lines, '#' comments and a non-numeric header row
/// are skipped. Throws Error(kParseError).
WarpFunction parse_warp_csv(std::string name, std::string_view text, bool periodic = false);

/// Pushforward to [a, b] of the normalized curvature measure of the surface
/// with fibers scaled by (1 - eps).
struct BaseMeasure {
  double eps = 0.0;
  std::vector<double> t;
  std::vector<double> density;
  double atom_a = 0.0;
  double atom_b = 0.0;
  EndKind kind_a = EndKind::kBoundary;
  EndKind kind_b = EndKind::kBoundary;
  double interior_mass = 0.0;

  double total() const { return interior_mass + atom_a + atom_b; }
};

/// Density -(1 - eps) f''. A pole carries 1 - (1 - eps) f'_inward, a boundary
/// circle (1 - eps) f'_outward. Throws Error(kInvalidArgument) unless
/// 0 <= eps < 1.
BaseMeasure curvature_density(const WarpFunction& w, double eps);

std::vector<BaseMeasure> adiabatic_sweep(const WarpFunction& w, std::span<const double> eps);

/// Compares the pushforward at eps = 0 with the base interval's own curvature
/// measure (atoms 1/2 at each end, nothing inside; zero for a circle).
struct NonsplitReport {
  BaseMeasure pushforward;
  double base_atom_a = 0.0;
  double base_atom_b = 0.0;
  double base_interior_mass = 0.0;
  /// Lebesgue measure of {t : lambda(t) > 0} and {t : lambda(t) != 0}.
  double positive_length = 0.0;
  double nonzero_length = 0.0;
  /// True when the density charges a set the base measure does not see.
  bool not_absolutely_continuous = false;
  /// eps -> 1 limits of the end atoms, next to chi(fiber) times the base atom
  /// at each end.
  double limit_atom_a = 0.0;
  double limit_atom_b = 0.0;
  double chi_fiber_times_base_a = 0.0;
  double chi_fiber_times_base_b = 0.0;
  bool limit_mismatch = false;
};

NonsplitReport nonsplit_demo(const WarpFunction& w);

}  // namespace curvcalc
