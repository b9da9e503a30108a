#include "betalag/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace betalag {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : key_(mix(mix(seed + kGolden) ^ mix(stream_id * kGolden + 1))) {}

uint64_t RngStream::next_u64() { return mix(key_ + (++counter_) * kGolden); }

double RngStream::uniform() {
  // 53-bit mantissa, shifted into (0,1)
  double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  return u;
}

double RngStream::normal() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be > 0");
  if (shape < 1.0) {
    // G(a) = G(a+1) * U^{1/a}
    double u = uniform();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = uniform();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> RngStream::dirichlet(const std::vector<double>& shapes) {
  std::vector<double> g(shapes.size());
  double total = 0.0;
  for (size_t i = 0; i < shapes.size(); ++i) {
    g[i] = gamma(shapes[i]);
    total += g[i];
  }
  if (total <= 0.0) {
    // all gammas underflowed; fall back to the largest-shape vertex
    size_t k = 0;
    for (size_t i = 1; i < shapes.size(); ++i)
      if (shapes[i] > shapes[k]) k = i;
    for (size_t i = 0; i < g.size(); ++i) g[i] = (i == k) ? 1.0 : 0.0;
    return g;
  }
  for (double& v : g) v /= total;
  return g;
}

double RngStream::chi(double dof) { return std::sqrt(2.0 * gamma(0.5 * dof)); }

}  // namespace betalag
