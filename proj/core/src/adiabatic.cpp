#include "curvcalc/adiabatic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "curvcalc/error.hpp"

namespace curvcalc {

namespace {

constexpr double kPoleTolerance = 1e-12;
// Relative to max|f| / h^2, the scale of finite-difference roundoff.
constexpr double kDensityTolerance = 1e-12;

// Composite Simpson; an odd interval count takes a 3/8 panel first.
double integrate_uniform(std::span<const double> y, double h) {
  const std::size_t intervals = y.size() - 1;
  std::size_t start = 0;
  double sum = 0.0;
  if (intervals % 2 == 1) {
    sum += 3.0 * h / 8.0 * (y[0] + 3.0 * y[1] + 3.0 * y[2] + y[3]);
    start = 3;
  }
  for (std::size_t i = start; i + 2 < y.size(); i += 2) {
    sum += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
  }
  return sum;
}

double one_sided_derivative(std::span<const double> f, double h, bool at_start) {
  if (at_start) {
    return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
  }
  const std::size_t m = f.size() - 1;
  return (25.0 * f[m] - 48.0 * f[m - 1] + 36.0 * f[m - 2] - 16.0 * f[m - 3] + 3.0 * f[m - 4]) / (12.0 * h);
}

}  // namespace

std::string_view to_string(EndKind kind) {
  switch (kind) {
    case EndKind::kPole:
      return "pole";
    case EndKind::kBoundary:
      return "boundary";
    case EndKind::kPeriodic:
      return "periodic";
  }
  return "?";
}

WarpFunction WarpFunction::sample(std::string name, const Analytic& profile, std::size_t points) {
  if (points < 5) {
    throw Error(ErrorCode::kGridTooCoarse, "grid needs at least 5 points, got " + std::to_string(points));
  }
  if (!(profile.b > profile.a)) throw Error(ErrorCode::kInvalidArgument, "profile interval is empty");
  WarpFunction w;
  w.name_ = std::move(name);
  w.a_ = profile.a;
  w.b_ = profile.b;
  w.periodic_ = profile.periodic;
  const std::size_t intervals = profile.periodic ? points : points - 1;
  w.h_ = (profile.b - profile.a) / static_cast<double>(intervals);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = i + 1 == points && !profile.periodic ? profile.b : profile.a + static_cast<double>(i) * w.h_;
    w.t_.push_back(t);
    w.f_.push_back(profile.f(t));
  }
  w.df_a_ = profile.df(profile.a);
  w.df_b_ = profile.df(profile.b);
  w.validate();
  return w;
}

WarpFunction WarpFunction::tabulated(std::string name, std::vector<double> t, std::vector<double> f,
                                     bool periodic) {
  if (t.size() != f.size()) throw Error(ErrorCode::kInvalidArgument, "t and f differ in length");
  if (t.size() < 5) {
    throw Error(ErrorCode::kGridTooCoarse, "grid needs at least 5 points, got " + std::to_string(t.size()));
  }
  WarpFunction w;
  w.name_ = std::move(name);
  w.h_ = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(w.h_ > 0.0)) throw Error(ErrorCode::kInvalidArgument, "grid must be increasing");
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (std::abs((t[i + 1] - t[i]) - w.h_) > 1e-6 * w.h_) {
      throw Error(ErrorCode::kInvalidArgument, "grid must be uniform");
    }
  }
  w.a_ = t.front();
  w.b_ = periodic ? t.back() + w.h_ : t.back();
  w.periodic_ = periodic;
  w.t_ = std::move(t);
  w.f_ = std::move(f);
  w.df_a_ = one_sided_derivative(w.f_, w.h_, true);
  w.df_b_ = one_sided_derivative(w.f_, w.h_, false);
  w.validate();
  return w;
}

WarpFunction WarpFunction::builtin(std::string_view name, std::size_t points) {
  using std::numbers::pi;
  Analytic p;
  if (name == "sphere") {
    p = {[](double t) { return std::cos(t); }, [](double t) { return -std::sin(t); }, -pi / 2, pi / 2};
  } else if (name == "cylinder") {
    p = {[](double) { return 1.0; }, [](double) { return 0.0; }, 0.0, 1.0};
  } else if (name == "cone") {
    p = {[](double t) { return t; }, [](double) { return 1.0; }, 0.0, 1.0};
  } else if (name == "torus") {
    p = {[](double t) { return 2.0 + std::cos(t); }, [](double t) { return -std::sin(t); }, 0.0, 2 * pi, true};
  } else if (name == "paraboloid") {
    p = {[](double t) { return 1.0 + t * t; }, [](double t) { return 2.0 * t; }, 0.0, 1.0};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown profile '" + std::string(name) + "'");
  }
  return sample(std::string(name), p, points);
}

void WarpFunction::validate() {
  const std::size_t n = f_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(f_[i])) throw Error(ErrorCode::kNegativeWarp, "profile is not finite");
    const bool end = !periodic_ && (i == 0 || i + 1 == n);
    if (f_[i] < (end ? -kPoleTolerance : kPoleTolerance)) {
      throw Error(ErrorCode::kNegativeWarp, "profile is not positive at t = " + std::to_string(t_[i]));
    }
  }
  if (kind_a() == EndKind::kPole && !(df_a_ > 0.0)) {
    throw Error(ErrorCode::kNegativeWarp, "profile does not grow away from the pole at a");
  }
  if (kind_b() == EndKind::kPole && !(-df_b_ > 0.0)) {
    throw Error(ErrorCode::kNegativeWarp, "profile does not grow away from the pole at b");
  }
}

EndKind WarpFunction::kind_a() const {
  if (periodic_) return EndKind::kPeriodic;
  return std::abs(f_.front()) < kPoleTolerance ? EndKind::kPole : EndKind::kBoundary;
}

EndKind WarpFunction::kind_b() const {
  if (periodic_) return EndKind::kPeriodic;
  return std::abs(f_.back()) < kPoleTolerance ? EndKind::kPole : EndKind::kBoundary;
}

std::vector<double> WarpFunction::second_derivative() const {
  const std::size_t n = f_.size();
  const double h2 = h_ * h_;
  std::vector<double> d(n);
  const auto& f = f_;
  if (periodic_) {
    auto at = [&](std::ptrdiff_t i) { return f[static_cast<std::size_t>((i % static_cast<std::ptrdiff_t>(n) + n) % n)]; };
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      d[i] = (-at(k - 2) + 16.0 * at(k - 1) - 30.0 * at(k) + 16.0 * at(k + 1) - at(k + 2)) / (12.0 * h2);
    }
    return d;
  }
  if (n < 6) {
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) / h2;
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    return d;
  }
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h2);
  }
  d[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]) / (12.0 * h2);
  d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) / (12.0 * h2);
  const std::size_t m = n - 1;
  d[m] = (45.0 * f[m] - 154.0 * f[m - 1] + 214.0 * f[m - 2] - 156.0 * f[m - 3] + 61.0 * f[m - 4] - 10.0 * f[m - 5]) /
         (12.0 * h2);
  d[m - 1] = (10.0 * f[m] - 15.0 * f[m - 1] - 4.0 * f[m - 2] + 14.0 * f[m - 3] - 6.0 * f[m - 4] + f[m - 5]) /
             (12.0 * h2);
  return d;
}

WarpFunction parse_warp_csv(std::string name, std::string_view text, bool periodic) {
  std::vector<double> t, f;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto comma = line.find(',');
    auto parse = [&](std::string_view field, double& out) {
      const auto b = field.find_first_not_of(" \t\r");
      const auto e = field.find_last_not_of(" \t\r");
      if (b == std::string_view::npos) return false;
      field = field.substr(b, e - b + 1);
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
      return ec == std::errc() && ptr == field.data() + field.size();
    };
    double tv = 0.0, fv = 0.0;
    const bool ok = comma != std::string::npos &&
                    parse(std::string_view(line).substr(0, comma), tv) &&
                    parse(std::string_view(line).substr(comma + 1), fv);
    if (!ok) {
      if (!seen_data && t.empty()) {
        seen_data = true;  // header row
        continue;
      }
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": expected 't,f'");
    }
    seen_data = true;
    t.push_back(tv);
    f.push_back(fv);
  }
  return WarpFunction::tabulated(std::move(name), std::move(t), std::move(f), periodic);
}

BaseMeasure curvature_density(const WarpFunction& w, double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps must lie in [0, 1)");
  }
  const double scale = 1.0 - eps;
  BaseMeasure m;
  m.eps = eps;
  m.t.assign(w.t().begin(), w.t().end());
  m.density = w.second_derivative();
  for (double& d : m.density) d *= -scale;
  m.kind_a = w.kind_a();
  m.kind_b = w.kind_b();
  if (w.periodic()) {
    double sum = 0.0;
    for (double d : m.density) sum += d;
    m.interior_mass = sum * w.step();
    return m;
  }
  m.interior_mass = integrate_uniform(m.density, w.step());
  m.atom_a = m.kind_a == EndKind::kPole ? 1.0 - scale * w.derivative_a() : -scale * w.derivative_a();
  m.atom_b = m.kind_b == EndKind::kPole ? 1.0 + scale * w.derivative_b() : scale * w.derivative_b();
  return m;
}

std::vector<BaseMeasure> adiabatic_sweep(const WarpFunction& w, std::span<const double> eps) {
  std::vector<BaseMeasure> out;
  out.reserve(eps.size());
  for (double e : eps) out.push_back(curvature_density(w, e));
  return out;
}

NonsplitReport nonsplit_demo(const WarpFunction& w) {
  NonsplitReport r;
  r.pushforward = curvature_density(w, 0.0);
  if (!w.periodic()) {
    r.base_atom_a = 0.5;
    r.base_atom_b = 0.5;
  }
  const std::size_t n = r.pushforward.density.size();
  double fmax = 0.0;
  for (double f : w.values()) fmax = std::max(fmax, std::abs(f));
  const double tol = kDensityTolerance * std::max(fmax, 1.0) / (w.step() * w.step());
  for (std::size_t i = 0; i < n; ++i) {
    const bool end = !w.periodic() && (i == 0 || i + 1 == n);
    const double cell = end ? w.step() / 2 : w.step();
    const double d = r.pushforward.density[i];
    if (d > tol) r.positive_length += cell;
    if (std::abs(d) > tol) r.nonzero_length += cell;
  }
  r.not_absolutely_continuous = r.nonzero_length > 0.0 && r.base_interior_mass == 0.0;

  auto limit = [](EndKind k) { return k == EndKind::kPole ? 1.0 : 0.0; };
  auto chi_fiber = [](EndKind k) { return k == EndKind::kPole ? 1.0 : 0.0; };
  r.limit_atom_a = limit(w.kind_a());
  r.limit_atom_b = limit(w.kind_b());
  r.chi_fiber_times_base_a = chi_fiber(w.kind_a()) * r.base_atom_a;
  r.chi_fiber_times_base_b = chi_fiber(w.kind_b()) * r.base_atom_b;
  r.limit_mismatch = std::abs(r.limit_atom_a - r.chi_fiber_times_base_a) > kPoleTolerance ||
                     std::abs(r.limit_atom_b - r.chi_fiber_times_base_b) > kPoleTolerance;
  return r;
}

}  // namespace curvcalc
