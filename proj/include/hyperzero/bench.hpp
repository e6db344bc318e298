#pragma once

#include <cstdint>
#include <string>

namespace hz {

struct BenchOptions {
  int count = 12;
  std::uint64_t seed = 7;
  double eps = 0.1;
  double eta = 0.5;
  int order = 8;
  bool timing = false;  // wall times break byte-identical reruns, so they are opt-in
};

// CSV: instance,n,m,k,delta,Z_exact,Z_perc,rel_err_perc,Z_interp,rel_err_interp,time_ms
// Complex values are written as re+imi.
std::string bench_csv(const BenchOptions& opts);

}  // namespace hz
