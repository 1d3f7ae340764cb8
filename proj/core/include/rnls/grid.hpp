#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rnls {

using complexd = std::complex<double>;

/// Periodic tensor-product grid. The box is centered on the origin,
/// axis j samples x_j(i) = (i - n_j/2) * h_j with h_j = L_j / n_j.
/// The last k axes are the regularized (y) directions.
struct GridSpec {
  int d = 1;
  int k = 0;
  std::array<int, 3> dims{};
  std::array<double, 3> lengths{};

  std::size_t size() const {
    std::size_t n = 1;
    for (int j = 0; j < d; ++j) n *= static_cast<std::size_t>(dims[j]);
    return n;
  }
  double spacing(int axis) const { return lengths[axis] / dims[axis]; }
  double cell_volume() const {
    double v = 1.0;
    for (int j = 0; j < d; ++j) v *= spacing(j);
    return v;
  }
  bool is_y_axis(int axis) const { return axis >= d - k; }
  double coord(int axis, int i) const {
    return (i - dims[axis] / 2) * spacing(axis);
  }
  /// Signed integer frequency in [-n/2, n/2): index n/2 maps to -n/2.
  int freq(int axis, int i) const {
    return i < dims[axis] / 2 ? i : i - dims[axis];
  }
  double wavenumber(int axis, int i) const {
    return 2.0 * M_PI * freq(axis, i) / lengths[axis];
  }

  bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(int d, int k, std::span<const int> dims,
                   std::span<const double> lengths);

/// Complex state sampled on a grid, row-major, last axis fastest.
struct Field {
  GridSpec grid;
  std::vector<complexd> values;
};

Field make_field(const GridSpec& grid);
bool all_finite(const Field& f);

enum class Direction { Forward, Inverse };

/// Discrete Fourier transform. Forward is unnormalized, inverse divides by
/// the point count, so forward-then-inverse is the identity up to round-off.
Field transform(const Field& f, Direction dir);

enum class Multiplier { Laplacian, Grad, PBeta, PBetaInv, H1Weight };

/// Real Fourier symbol on the wavenumber lattice. Gradient symbols are stored
/// as the real array kappa_j with `imaginary` set; apply() multiplies by
/// i*kappa_j. The Nyquist mode is retained for all symbols except Grad,
/// where it is zeroed to keep differentiation skew-symmetric.
struct SpectralMultiplier {
  GridSpec grid;
  std::vector<double> symbol;
  bool imaginary = false;
};

SpectralMultiplier make_multiplier(const GridSpec& grid, Multiplier kind,
                                   double beta = 0.0, int axis = 0);
Field apply(const SpectralMultiplier& op, const Field& f);
Field apply_multiplier(const Field& f, Multiplier kind, double beta = 0.0,
                       int axis = 0);

enum class Weight { L2, H1, Mform };

/// Real symmetric bilinear forms. L2 is Re sum(u conj(v)) * cell volume,
/// H1 adds the gradient correlations (weight 1 + |kappa|^2 in Fourier),
/// Mform is (1/2)[(u,v)_2 + beta * sum_y (d_y u, d_y v)_2] so that
/// inner(u,u,Mform) equals the conserved mass M(u).
double inner(const Field& u, const Field& v, Weight w, double beta = 0.0);
double norm(const Field& u, Weight w, double beta = 0.0);

/// Two-thirds-rule mask (1 keeps the mode, 0 zeroes it).
std::vector<double> dealias_mask(const GridSpec& grid);

}  // namespace rnls
