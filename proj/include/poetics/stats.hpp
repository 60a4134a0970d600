#pragma once

#include <algorithm>
#include <vector>

namespace poetics {

// Mean that does not depend on the order of the inputs: values are summed in
// sorted order.
inline double order_free_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace poetics
