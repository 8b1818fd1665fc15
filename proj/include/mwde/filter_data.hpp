#pragma once

#include <string>
#include <vector>

namespace mwde::detail {

// Compiled-in copy of one filter record. Matrix entries are stored flat in
// tap-major, row-major order; the tap index range starts at support_lo and
// holds lowpass.size() / multiplicity^2 taps, which can exceed
// support_hi - support_lo + 1 when the scaling vector vanishes before the
// last tap (dghm).
struct EmbeddedFilter {
  std::string name;
  int multiplicity = 1;
  int support_lo = 0;
  int support_hi = 0;
  std::vector<double> lowpass;
  std::vector<double> highpass;
};

std::vector<EmbeddedFilter> embedded_filters();

}  // namespace mwde::detail
