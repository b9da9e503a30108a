#pragma once

#include <cstdint>
#include <vector>

namespace betalag {

// Counter-based stream RNG: draw i of stream (seed, stream_id) is
// splitmix_mix(key + i * golden) with key derived from (seed, stream_id) by two
// scramble rounds. Identical (seed, stream-id) gives the identical sequence on
// every platform, and streams can be created per path / per draw for
// worker-count-independent Monte Carlo.
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream_id = 0);

  uint64_t next_u64();
  // uniform on (0, 1), never returns 0 or 1
  double uniform();
  // standard normal (Box-Muller, two uniforms per draw)
  double normal();
  // Gamma(shape, 1), any shape > 0 (Marsaglia-Tsang; boosted for shape < 1)
  double gamma(double shape);
  // Dirichlet with the given shapes (all > 0), normalized gamma variates
  std::vector<double> dirichlet(const std::vector<double>& shapes);
  // chi-distributed with `dof` degrees of freedom (dof > 0, not necessarily
  // integer)
  double chi(double dof);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace betalag
