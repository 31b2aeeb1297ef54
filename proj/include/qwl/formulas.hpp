#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwl/hosts.hpp"

namespace qwl {

// Closed-form minimum wirelength of Q_n^3 into each host, n >= 2.
std::int64_t wl_cylinder(int n);
std::int64_t wl_caterpillar(int n);
std::int64_t wl_firecracker(int n);
std::int64_t wl_banana(int n);
std::int64_t wl_formula(HostKind kind, int n);

// sum_{i=1}^{M-1} (2n * 3i - 2 I(3i)) with M = 3^{n-1}: the total
// congestion over the spine/column cuts. Equals 2M(M-1).
std::int64_t spine_cut_sum(int n);

struct WirelengthRecord {
  HostKind kind;
  int n = 0;
  std::optional<std::int64_t> formula;
  std::optional<std::int64_t> cuts;
  std::optional<std::int64_t> distance;
  bool agree = false;
  std::string error;  // non-empty when the instance could not be built
};

// Builds Q_n^3 and each host, evaluates all three engines and records
// whether they agree. Errors are recorded, never thrown.
std::vector<WirelengthRecord> cross_check(int n, std::span<const HostKind> kinds,
                                          unsigned threads = 1);

// CSV with header "host,n,formula,cuts,distance,agree".
std::string to_csv(std::span<const WirelengthRecord> records);

}  // namespace qwl
