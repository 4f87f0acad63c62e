#include "scgl/noise.hpp"

#include <cmath>

namespace scgl {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  const uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}

}  // namespace

Philox4 philox4x32_10(Philox4 c, uint32_t k0, uint32_t k1) {
  for (int round = 0; round < 10; ++round) {
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c.v[0], hi0, lo0);
    mulhilo(kPhiloxM1, c.v[2], hi1, lo1);
    c = Philox4{{hi1 ^ c.v[1] ^ k0, lo1, hi0 ^ c.v[3] ^ k1, lo0}};
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return c;
}

std::array<double, 2> gaussian_pair(const RngStream& stream, uint64_t step_index,
                                    uint32_t mode_index, DrawPurpose purpose) {
  if (step_index >> 32 || stream.replica_id >> 32)
    throw std::invalid_argument("gaussian_pair: step and replica_id must fit in 32 bits");
  // counter layout: one lane each for mode, step, replica; purpose in the last
  Philox4 ctr{{mode_index, static_cast<uint32_t>(step_index),
               static_cast<uint32_t>(stream.replica_id), static_cast<uint32_t>(purpose)}};
  const Philox4 r = philox4x32_10(ctr, static_cast<uint32_t>(stream.seed),
                                  static_cast<uint32_t>(stream.seed >> 32));
  const uint64_t a = (static_cast<uint64_t>(r.v[1]) << 32) | r.v[0];
  const uint64_t b = (static_cast<uint64_t>(r.v[3]) << 32) | r.v[2];
  // u1 in (0,1] so log is finite; u2 in [0,1)
  const double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1p-53;
  const double u2 = static_cast<double>(b >> 11) * 0x1p-53;
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double th = kTwoPi * u2;
  return {rad * std::cos(th), rad * std::sin(th)};
}

BrownianIncrements sample_increments(RngStream& stream, const ModeSet& set, double delta_t) {
  if (!(delta_t > 0.0)) throw std::invalid_argument("sample_increments: delta_t must be > 0");
  BrownianIncrements inc;
  inc.delta_t = delta_t;
  inc.db.resize(set.size());
  const double amp = std::sqrt(delta_t / 2.0);
  for (int i = 0; i < set.size(); ++i) {
    const auto z = gaussian_pair(stream, stream.step, static_cast<uint32_t>(i), DrawPurpose::kGeneric);
    inc.db[i] = Complex(amp * z[0], amp * z[1]);
  }
  ++stream.step;
  return inc;
}

}  // namespace scgl
