#pragma once

#include "scgl/types.hpp"

// Grid <-> mode transforms backed by FFTW (plans cached per size, created with
// FFTW_ESTIMATE | FFTW_UNALIGNED so results are deterministic and execution is
// safe from any thread with ordinary buffers).

namespace scgl {

// unnormalized forward DFT: out[b] = sum_j in[j] e^{-2pi i j.b/n}
void fft2(int n, const Complex* in, Complex* out);
// unnormalized inverse DFT: out[j] = sum_b in[b] e^{+2pi i j.b/n}
void ifft2(int n, const Complex* in, Complex* out);

// Evaluate the field sum_k c_k phi_k on an n x n grid. Requires n > 2*k_max
// so every retained mode sits strictly below the grid Nyquist.
GridField to_grid(const ModeField& f, int n_grid);

// Read spectral coefficients back from a grid (bins at k mod n). Exact inverse
// of to_grid for band-limited fields; frequencies outside the cutoff fold in.
ModeField to_modes(const GridField& g, const ModeSetPtr& set);

}  // namespace scgl
