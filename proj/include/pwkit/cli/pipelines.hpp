#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pwkit/cli/config.hpp"
#include "pwkit/cli/report.hpp"
#include "pwkit/grid.hpp"

namespace pwkit {

/// Uniform on [0, 1) from the top 53 bits of a 64-bit Mersenne twister, so
/// the sequence is the same on every platform.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Seeded bumps on R^2 with radius in [0.4, 0.6] and |center| <= 0.3.
std::vector<RealFunction> bump_suite(const RunConfig& cfg);

Report run_radon(const RunConfig& cfg);
Report run_slice(const RunConfig& cfg);
Report run_pw(const RunConfig& cfg);
Report run_sphere(const RunConfig& cfg);
Report run_weyl(const RunConfig& cfg);

/// Dispatches on cfg.command. Module errors are rethrown as Error with the
/// pipeline name prefixed.
Report run(const RunConfig& cfg);

}  // namespace pwkit
