#pragma once

#include <cstdint>
#include <vector>

#include "scgl/types.hpp"

// Complex space-time white noise as independent complex Brownian motions per
// eigenmode. Draws come from a counter-based generator (Philox4x32-10) keyed
// by (seed, replica, step, mode, purpose), so replay is bitwise reproducible
// and independent of thread scheduling. Gaussians by Box-Muller (fixed choice;
// part of the determinism contract).

namespace scgl {

struct Philox4 {
  uint32_t v[4];
};

Philox4 philox4x32_10(Philox4 counter, uint32_t key0, uint32_t key1);

// draw contexts; distinct purposes never collide
enum class DrawPurpose : uint32_t {
  kOuInit = 1,
  kOuStep = 2,
  kInitialData = 3,
  kGeneric = 4,
};

// How a stream's draws enter a run. kConjugate feeds mode k the conjugated
// draw of mode -k, realizing the conjugation symmetry of the equation.
enum class NoiseCoupling { kIdentity, kConjugate };

struct RngStream {
  uint64_t seed = 0;
  uint64_t replica_id = 0;
  uint64_t step = 0;  // counter state, advanced by each sampling call

  RngStream() = default;
  RngStream(uint64_t s, uint64_t r) : seed(s), replica_id(r) {}
};

// pair of independent standard normals for (step, mode, purpose)
std::array<double, 2> gaussian_pair(const RngStream& stream, uint64_t step_index,
                                    uint32_t mode_index, DrawPurpose purpose);

struct BrownianIncrements {
  double delta_t = 0.0;
  std::vector<Complex> db;  // E|dB_k|^2 = delta_t
};

// One increment per mode over a step delta_t; advances stream.step.
BrownianIncrements sample_increments(RngStream& stream, const ModeSet& set, double delta_t);

}  // namespace scgl
