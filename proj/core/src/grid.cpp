#include "rnls/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace rnls {

GridSpec make_grid(int d, int k, std::span<const int> dims,
                   std::span<const double> lengths) {
  if (d < 1 || d > 3) throw std::invalid_argument("grid: d must be 1, 2 or 3");
  if (k < 0 || k > d) throw std::invalid_argument("grid: need 0 <= k <= d");
  if (static_cast<int>(dims.size()) != d ||
      static_cast<int>(lengths.size()) != d)
    throw std::invalid_argument("grid: dims/lengths size must equal d");
  GridSpec g;
  g.d = d;
  g.k = k;
  for (int j = 0; j < d; ++j) {
    if (dims[j] < 8 || dims[j] % 2 != 0)
      throw std::invalid_argument("grid: every n_j must be even and >= 8");
    if (!(lengths[j] > 0.0))
      throw std::invalid_argument("grid: every L_j must be positive");
    g.dims[j] = dims[j];
    g.lengths[j] = lengths[j];
  }
  return g;
}

Field make_field(const GridSpec& grid) {
  return Field{grid, std::vector<complexd>(grid.size())};
}

bool all_finite(const Field& f) {
  for (const auto& z : f.values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

namespace {

struct PlanKey {
  int rank;
  std::array<int, 3> n;
  int sign;
  auto operator<=>(const PlanKey&) const = default;
};

class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }
  void execute(const GridSpec& g, int sign, const complexd* in,
               complexd* out) {
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      PlanKey key{g.d, g.dims, sign};
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        std::vector<complexd> buf_in(g.size()), buf_out(g.size());
        fftw_plan p = fftw_plan_dft(
            g.d, g.dims.data(), reinterpret_cast<fftw_complex*>(buf_in.data()),
            reinterpret_cast<fftw_complex*>(buf_out.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        it = plans_.emplace(key, p).first;
      }
      plan = it->second;
    }
    fftw_execute_dft(
        plan,
        reinterpret_cast<fftw_complex*>(const_cast<complexd*>(in)),
        reinterpret_cast<fftw_complex*>(out));
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

// Walks the flat row-major lattice keeping per-axis indices in idx[].
template <typename F>
void for_each_mode(const GridSpec& g, F&& fn) {
  std::array<int, 3> idx{0, 0, 0};
  const std::size_t n = g.size();
  for (std::size_t flat = 0; flat < n; ++flat) {
    fn(flat, idx);
    for (int j = g.d - 1; j >= 0; --j) {
      if (++idx[j] < g.dims[j]) break;
      idx[j] = 0;
    }
  }
}

}  // namespace

Field transform(const Field& f, Direction dir) {
  Field out = make_field(f.grid);
  const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  PlanCache::instance().execute(f.grid, sign, f.values.data(),
                                out.values.data());
  if (dir == Direction::Inverse) {
    const double inv_n = 1.0 / static_cast<double>(f.grid.size());
    for (auto& z : out.values) z *= inv_n;
  }
  return out;
}

SpectralMultiplier make_multiplier(const GridSpec& grid, Multiplier kind,
                                   double beta, int axis) {
  if ((kind == Multiplier::PBeta || kind == Multiplier::PBetaInv) &&
      grid.k > 0 && !(beta > 0.0))
    throw std::invalid_argument("multiplier: pbeta kinds need beta > 0");
  if (kind == Multiplier::Grad && (axis < 0 || axis >= grid.d))
    throw std::invalid_argument("multiplier: grad axis out of range");

  SpectralMultiplier op;
  op.grid = grid;
  op.symbol.resize(grid.size());
  op.imaginary = kind == Multiplier::Grad;

  for_each_mode(grid, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double k2 = 0.0, ky2 = 0.0;
    for (int j = 0; j < grid.d; ++j) {
      const double kj = grid.wavenumber(j, idx[j]);
      k2 += kj * kj;
      if (grid.is_y_axis(j)) ky2 += kj * kj;
    }
    switch (kind) {
      case Multiplier::Laplacian:
        op.symbol[flat] = -k2;
        break;
      case Multiplier::Grad: {
        // Zeroed at the Nyquist index: the symbol is odd.
        const int i = idx[axis];
        op.symbol[flat] = (i == grid.dims[axis] / 2)
                              ? 0.0
                              : grid.wavenumber(axis, i);
        break;
      }
      case Multiplier::PBeta:
        op.symbol[flat] = 1.0 + beta * ky2;
        break;
      case Multiplier::PBetaInv:
        op.symbol[flat] = 1.0 / (1.0 + beta * ky2);
        break;
      case Multiplier::H1Weight:
        op.symbol[flat] = 1.0 + k2;
        break;
    }
  });
  return op;
}

Field apply(const SpectralMultiplier& op, const Field& f) {
  if (!(f.grid == op.grid))
    throw std::invalid_argument("apply: grid mismatch");
  Field hat = transform(f, Direction::Forward);
  if (op.imaginary) {
    for (std::size_t i = 0; i < hat.values.size(); ++i)
      hat.values[i] = complexd(0.0, op.symbol[i]) * hat.values[i];
  } else {
    for (std::size_t i = 0; i < hat.values.size(); ++i)
      hat.values[i] *= op.symbol[i];
  }
  return transform(hat, Direction::Inverse);
}

Field apply_multiplier(const Field& f, Multiplier kind, double beta,
                       int axis) {
  return apply(make_multiplier(f.grid, kind, beta, axis), f);
}

double inner(const Field& u, const Field& v, Weight w, double beta) {
  if (!(u.grid == v.grid)) throw std::invalid_argument("inner: grid mismatch");
  const GridSpec& g = u.grid;
  if (w == Weight::L2) {
    double acc = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i)
      acc += u.values[i].real() * v.values[i].real() +
             u.values[i].imag() * v.values[i].imag();
    return acc * g.cell_volume();
  }
  const Field uh = transform(u, Direction::Forward);
  const Field vh = transform(v, Direction::Forward);
  const double scale = g.cell_volume() / static_cast<double>(g.size());
  double acc = 0.0;
  for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double k2 = 0.0, ky2 = 0.0;
    for (int j = 0; j < g.d; ++j) {
      const double kj = g.wavenumber(j, idx[j]);
      k2 += kj * kj;
      if (g.is_y_axis(j)) ky2 += kj * kj;
    }
    const double weight =
        w == Weight::H1 ? 1.0 + k2 : 0.5 * (1.0 + beta * ky2);
    acc += weight * (uh.values[flat].real() * vh.values[flat].real() +
                     uh.values[flat].imag() * vh.values[flat].imag());
  });
  return acc * scale;
}

double norm(const Field& u, Weight w, double beta) {
  const double s = inner(u, u, w, beta);
  return std::sqrt(s > 0.0 ? s : 0.0);
}

std::vector<double> dealias_mask(const GridSpec& grid) {
  std::vector<double> mask(grid.size(), 1.0);
  for_each_mode(grid, [&](std::size_t flat, const std::array<int, 3>& idx) {
    for (int j = 0; j < grid.d; ++j) {
      if (std::abs(grid.freq(j, idx[j])) > grid.dims[j] / 3) {
        mask[flat] = 0.0;
        break;
      }
    }
  });
  return mask;
}

}  // namespace rnls
