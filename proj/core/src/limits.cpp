#include "tfp/limits.hpp"

#include <cstdlib>
#include <string>

namespace tfp {

ComputeLimits ComputeLimits::defaults() {
  ComputeLimits l;
  l.max_degree = 60;
  l.max_basis_size = 20000;
  l.max_pair_reductions = 2000000;
  return l;
}

ComputeLimits ComputeLimits::unbounded() { return ComputeLimits{}; }

ComputeLimits ComputeLimits::from_env() {
  ComputeLimits l = defaults();
  const char* env = std::getenv("TFP_LIMITS");
  if (!env) return l;
  std::string s(env);
  std::optional<long long> vals[3];
  size_t start = 0;
  for (int field = 0; field < 3 && start <= s.size(); ++field) {
    size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start);
    if (!tok.empty()) {
      try {
        long long v = std::stoll(tok);
        if (v > 0) vals[field] = v;
      } catch (...) {
        // ignore malformed fields, keep the default
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (vals[0]) l.max_degree = vals[0];
  if (vals[1]) l.max_basis_size = vals[1];
  if (vals[2]) l.max_pair_reductions = vals[2];
  return l;
}

}  // namespace tfp
