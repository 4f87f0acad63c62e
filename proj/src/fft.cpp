#include "scgl/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace scgl {

namespace {

// One cached out-of-place plan per (n, sign). fftw_execute_dft is thread-safe;
// plan creation is not, hence the mutex.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<Complex> a(static_cast<size_t>(n) * n), b(a.size());
    fftw_plan p = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::map<std::pair<int, int>, fftw_plan> plans_;
  std::mutex mu_;
};

void run(int n, int sign, const Complex* in, Complex* out) {
  fftw_plan p = PlanCache::instance().get(n, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void fft2(int n, const Complex* in, Complex* out) { run(n, FFTW_FORWARD, in, out); }
void ifft2(int n, const Complex* in, Complex* out) { run(n, FFTW_BACKWARD, in, out); }

GridField to_grid(const ModeField& f, int n_grid) {
  const ModeSet& set = *f.set;
  std::vector<Complex> bins(static_cast<size_t>(n_grid) * n_grid, Complex(0.0));
  const double scale = 1.0 / kTwoPi;  // phi_k = e^{ik.x}/(2pi)
  for (int i = 0; i < set.size(); ++i) {
    if (f.coeffs[i] == Complex(0.0)) continue;
    const Mode& mk = set[i];
    if (2 * std::abs(mk.k1) >= n_grid || 2 * std::abs(mk.k2) >= n_grid)
      throw std::invalid_argument("to_grid: nonzero coefficient above the grid Nyquist");
    const int b1 = ((mk.k1 % n_grid) + n_grid) % n_grid;
    const int b2 = ((mk.k2 % n_grid) + n_grid) % n_grid;
    bins[static_cast<size_t>(b1) * n_grid + b2] += f.coeffs[i] * scale;
  }
  GridField g(n_grid);
  ifft2(n_grid, bins.data(), g.v.data());
  return g;
}

ModeField to_modes(const GridField& g, const ModeSetPtr& set) {
  const int n = g.n;
  if (n <= 2 * set->k_max())
    throw std::invalid_argument("to_modes: grid too small for the mode cutoff");
  std::vector<Complex> bins(g.v.size());
  fft2(n, g.v.data(), bins.data());
  ModeField f(set);
  const double scale = kTwoPi / (static_cast<double>(n) * n);
  for (int i = 0; i < set->size(); ++i) {
    const Mode& mk = (*set)[i];
    const int b1 = ((mk.k1 % n) + n) % n;
    const int b2 = ((mk.k2 % n) + n) % n;
    f.coeffs[i] = bins[static_cast<size_t>(b1) * n + b2] * scale;
  }
  return f;
}

}  // namespace scgl
