#include "scgl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scgl/fft.hpp"

namespace scgl {

namespace {
constexpr double kZeroEigTol = 1e-12;
}

std::shared_ptr<const ModeSet> ModeSet::create(MagneticPotential a, int k_max) {
  if (k_max < 1) throw std::invalid_argument("ModeSet: k_max must be >= 1");
  if (!std::isfinite(a.a1) || !std::isfinite(a.a2))
    throw std::invalid_argument("ModeSet: potential must be finite");
  auto set = std::shared_ptr<ModeSet>(new ModeSet());
  set->a_ = a;
  set->k_max_ = k_max;
  const int w = 2 * k_max + 1;
  set->modes_.reserve(static_cast<size_t>(w) * w);
  for (int k1 = -k_max; k1 <= k_max; ++k1)
    for (int k2 = -k_max; k2 <= k_max; ++k2) {
      const double d1 = k1 - a.a1, d2 = k2 - a.a2;
      set->modes_.push_back({k1, k2, d1 * d1 + d2 * d2});
    }
  std::sort(set->modes_.begin(), set->modes_.end(), [](const Mode& x, const Mode& y) {
    if (x.lambda_sq != y.lambda_sq) return x.lambda_sq < y.lambda_sq;
    if (x.k1 != y.k1) return x.k1 < y.k1;
    return x.k2 < y.k2;
  });
  set->lookup_.assign(static_cast<size_t>(w) * w, -1);
  double lp2 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < set->size(); ++i) {
    const Mode& mk = set->modes_[i];
    set->lookup_[static_cast<size_t>(mk.k1 + k_max) * w + (mk.k2 + k_max)] = i;
    if (mk.lambda_sq <= kZeroEigTol)
      set->zero_index_ = i;
    else
      lp2 = std::min(lp2, mk.lambda_sq);
  }
  set->lambda_plus_ = std::isfinite(lp2) ? std::sqrt(lp2) : std::nan("");
  return set;
}

int ModeSet::index_of(int k1, int k2) const {
  if (std::abs(k1) > k_max_ || std::abs(k2) > k_max_) return -1;
  const int w = 2 * k_max_ + 1;
  return lookup_[static_cast<size_t>(k1 + k_max_) * w + (k2 + k_max_)];
}

int ModeSet::conjugate_index(int i) const { return index_of(-modes_[i].k1, -modes_[i].k2); }

std::string ModeSet::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "k1,k2,lambda_sq\n";
  for (const Mode& mk : modes_) os << mk.k1 << "," << mk.k2 << "," << mk.lambda_sq << "\n";
  return os.str();
}

ModeSetPtr enumerate_modes(MagneticPotential a, int k_max) { return ModeSet::create(a, k_max); }

ModeField apply_multiplier(const ModeField& f, const std::function<Complex(double)>& mult) {
  ModeField out = f;
  for (int i = 0; i < f.size(); ++i) out.coeffs[i] *= mult((*f.set)[i].lambda_sq);
  return out;
}

ModeField projector_pn(const ModeField& f, int N) {
  if (N < 1) throw std::invalid_argument("projector_pn: N must be >= 1");
  ModeField out = f;
  for (int i = 0; i < f.size(); ++i) out.coeffs[i] *= pn_weight((*f.set)[i].lambda_sq, N);
  return out;
}

bool is_dyadic(double M) {
  if (!(M > 0.0) || !std::isfinite(M)) return false;
  const double l = std::log2(M);
  const double r = std::round(l);
  return std::abs(l - r) < 1e-12 && r >= -1.0;
}

ModeField dyadic_block_qm(const ModeField& f, double M) {
  if (!is_dyadic(M)) throw std::invalid_argument("dyadic_block_qm: M must be dyadic >= 1/2");
  ModeField out = f;
  for (int i = 0; i < f.size(); ++i) out.coeffs[i] *= q_weight((*f.set)[i].lambda_sq, M);
  return out;
}

int weyl_count(const ModeSet& set, double Lambda) {
  if (Lambda < 0.0) throw std::invalid_argument("weyl_count: Lambda must be >= 0");
  if (Lambda > set.k_max() - set.potential().max_abs() - 1.0)
    throw std::invalid_argument("weyl_count: Lambda beyond the reliable range of this cutoff");
  const double l2 = Lambda * Lambda * (1.0 + 1e-14) + kZeroEigTol;
  // modes are sorted, count the prefix
  int lo = 0, hi = set.size();
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (set[mid].lambda_sq <= l2)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

double torus_distance(double x1, double x2, double y1, double y2) {
  auto wrap = [](double d) {
    d = std::fmod(d, kTwoPi);
    if (d < 0) d += kTwoPi;
    return std::min(d, kTwoPi - d);
  };
  const double d1 = wrap(x1 - y1), d2 = wrap(x2 - y2);
  return std::hypot(d1, d2);
}

Complex green_regularized(const ModeSet& set, int N1, int N2,
                          const std::array<double, 2>& x, const std::array<double, 2>& y) {
  if (N1 < 1 || N2 < 1) throw std::invalid_argument("green_regularized: N must be >= 1");
  if (set.k_max() < 2 * std::max(N1, N2))
    throw std::invalid_argument("green_regularized: k_max must be >= 2*max(N1,N2)");
  const double d1 = x[0] - y[0], d2 = x[1] - y[1];
  Complex sum(0.0);
  for (const Mode& mk : set.modes()) {
    if (mk.lambda_sq <= kZeroEigTol) continue;
    const double w = pn_weight(mk.lambda_sq, N1) * pn_weight(mk.lambda_sq, N2);
    if (w == 0.0) continue;
    const double phase = mk.k1 * d1 + mk.k2 * d2;
    sum += w / mk.lambda_sq * Complex(std::cos(phase), std::sin(phase));
  }
  return sum / kTorusArea;
}

namespace {

// common path: inverse transform of a multiplier profile over the offset grid
GridField kernel_table(MagneticPotential a, int n_grid,
                       const std::function<double(double)>& profile) {
  std::vector<Complex> bins(static_cast<size_t>(n_grid) * n_grid, Complex(0.0));
  const int kb = n_grid / 2 - 1;
  for (int k1 = -kb; k1 <= kb; ++k1)
    for (int k2 = -kb; k2 <= kb; ++k2) {
      const double d1 = k1 - a.a1, d2 = k2 - a.a2;
      const double w = profile(d1 * d1 + d2 * d2);
      if (w == 0.0) continue;
      const int b1 = ((k1 % n_grid) + n_grid) % n_grid;
      const int b2 = ((k2 % n_grid) + n_grid) % n_grid;
      bins[static_cast<size_t>(b1) * n_grid + b2] = Complex(w / kTorusArea, 0.0);
    }
  GridField g(n_grid);
  ifft2(n_grid, bins.data(), g.v.data());
  return g;
}

}  // namespace

GridField green_regularized_table(MagneticPotential a, int N1, int N2, int n_grid) {
  const int need = 2 * std::max(N1, N2);
  if (n_grid / 2 - 1 < need)
    throw std::invalid_argument("green_regularized_table: grid too small");
  return kernel_table(a, n_grid, [&](double l2) {
    if (l2 <= kZeroEigTol) return 0.0;
    return pn_weight(l2, N1) * pn_weight(l2, N2) / l2;
  });
}

GridField multiplier_kernel_table(MagneticPotential a, double h, int n_grid) {
  if (!(h > 0.0)) throw std::invalid_argument("multiplier_kernel_table: h must be > 0");
  if (n_grid / 2 - 1 < static_cast<int>(1.0 / h) + 1)
    throw std::invalid_argument("multiplier_kernel_table: grid too small");
  return kernel_table(a, n_grid, [&](double l2) { return psi0(h * h * l2); });
}

}  // namespace scgl
