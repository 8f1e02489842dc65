#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfp/errors.hpp"
#include "tfp/polynomial.hpp"

namespace tfp {

/// Budget for a Groebner computation. Running out is a first-class outcome
/// (LimitExceeded), not a crash: callers downgrade it to "skipped".
struct ComputeLimits {
  std::optional<long long> max_degree;           // cap on S-pair lcm degree
  std::optional<long long> max_basis_size;       // cap on intermediate basis size
  std::optional<long long> max_pair_reductions;  // cap on reduction count

  static ComputeLimits defaults();
  static ComputeLimits unbounded();
  /// defaults(), overridden by the TFP_LIMITS environment variable
  /// ("maxdeg,maxsize,maxred"; empty fields keep the default).
  static ComputeLimits from_env();
};

class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& which, std::vector<Polynomial> partial_basis,
                long long reductions)
      : Error("limit exceeded: " + which),
        which_limit(which),
        partial_basis(std::move(partial_basis)),
        reductions(reductions) {}

  std::string which_limit;
  std::vector<Polynomial> partial_basis;
  long long reductions;
};

}  // namespace tfp
