#include "scgl/ou.hpp"

#include <cmath>
#include <sstream>

#include "scgl/cutoff.hpp"

namespace scgl {

namespace {

// draw for mode i, conjugate-coupled draws take the negated mode's numbers
Complex coupled_draw(const RngStream& stream, const ModeSet& set, int i, uint64_t step,
                     DrawPurpose purpose, NoiseCoupling coupling) {
  int j = i;
  if (coupling == NoiseCoupling::kConjugate) {
    j = set.conjugate_index(i);
    if (j < 0) throw std::logic_error("conjugate coupling requires a symmetric mode set");
  }
  const auto z = gaussian_pair(stream, step, static_cast<uint32_t>(j), purpose);
  Complex g(z[0], z[1]);
  return coupling == NoiseCoupling::kConjugate ? std::conj(g) : g;
}

}  // namespace

OUState OUState::init_stationary(const Params& params, const ModeSetPtr& set, int N,
                                 RngStream& stream, NoiseCoupling coupling) {
  params.validate();
  if (N < 1) throw std::invalid_argument("init_stationary: N must be >= 1");
  OUState st;
  st.psi_ = ModeField(set);
  st.N_ = N;
  st.t_ = 0.0;
  st.w_.resize(set->size());
  for (int i = 0; i < set->size(); ++i) {
    const Mode& mk = (*set)[i];
    const double w = pn_weight(mk.lambda_sq, N);
    st.w_[i] = w;
    if (i == set->zero_mode_index()) {
      st.psi_.coeffs[i] = Complex(0.0);  // B_0(0) = 0
      continue;
    }
    const double var = params.gamma * w * w / (params.alpha1 * mk.lambda_sq);
    const Complex g = coupled_draw(stream, *set, i, stream.step, DrawPurpose::kOuInit, coupling);
    st.psi_.coeffs[i] = std::sqrt(var / 2.0) * g;
  }
  ++stream.step;
  return st;
}

void OUState::evolve(const Params& params, double delta_t, RngStream& stream,
                     NoiseCoupling coupling) {
  if (!(delta_t > 0.0)) throw std::invalid_argument("evolve: delta_t must be > 0");
  const ModeSet& set = *psi_.set;
  const Complex z(params.alpha1, params.alpha2);
  for (int i = 0; i < set.size(); ++i) {
    const Mode& mk = set[i];
    const double w = w_[i];
    const Complex g = coupled_draw(stream, set, i, stream.step, DrawPurpose::kOuStep, coupling);
    if (i == set.zero_mode_index()) {
      // Brownian branch: dB with E|dB|^2 = delta_t, amplitude sqrt(2 gamma)
      psi_.coeffs[i] += std::sqrt(2.0 * params.gamma) * std::sqrt(delta_t / 2.0) * w * g;
      continue;
    }
    const Complex decay = std::exp(-z * mk.lambda_sq * delta_t);
    const double var = params.gamma * w * w / (params.alpha1 * mk.lambda_sq) *
                       (1.0 - std::exp(-2.0 * params.alpha1 * mk.lambda_sq * delta_t));
    psi_.coeffs[i] = decay * psi_.coeffs[i] + std::sqrt(var / 2.0) * g;
  }
  ++stream.step;
  t_ += delta_t;
}

std::string OUState::snapshot_csv(uint64_t seed) const {
  std::ostringstream os;
  os.precision(17);
  os << "# {\"t\": " << t_ << ", \"N\": " << N_ << ", \"seed\": " << seed << "}\n";
  os << "k1,k2,re,im\n";
  const ModeSet& set = *psi_.set;
  for (int i = 0; i < set.size(); ++i)
    os << set[i].k1 << "," << set[i].k2 << "," << psi_.coeffs[i].real() << ","
       << psi_.coeffs[i].imag() << "\n";
  return os.str();
}

double sigma_n_spatial(const Params& params, const ModeSet& set, int N) {
  if (set.k_max() < N + static_cast<int>(std::ceil(set.potential().max_abs())))
    throw std::invalid_argument("sigma_n: mode set does not cover lambda^2 < N^2");
  double s = 0.0;
  for (const Mode& mk : set.modes()) {
    if (mk.lambda_sq <= 1e-12) continue;
    const double w = pn_weight(mk.lambda_sq, N);
    s += w * w * params.gamma / (params.alpha1 * mk.lambda_sq);
  }
  return s / kTorusArea;
}

double sigma_n(const Params& params, const ModeSet& set, int N, double t) {
  double s = sigma_n_spatial(params, set, N);
  if (set.zero_mode_index() >= 0) s += 2.0 * params.gamma * t / kTorusArea;
  return s;
}

}  // namespace scgl
