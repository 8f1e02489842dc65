#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tfp {

/// A variable name: a tag plus a nonempty index tuple, printed "tag_i1_i2_...".
struct VarName {
  std::string tag;
  std::vector<int> indices;

  bool operator==(const VarName& o) const { return tag == o.tag && indices == o.indices; }
  std::string str() const;
};

/// Immutable description of a polynomial ring: an ordered list of named
/// variables. Cheap to copy (shared handle); two RingSpecs describe the same
/// ring iff their variable lists agree position by position.
class RingSpec {
 public:
  RingSpec() = default;

  /// Validates uniqueness of names and uniform index arity per tag.
  static RingSpec create(std::vector<VarName> vars);

  int size() const { return impl_ ? static_cast<int>(impl_->vars.size()) : 0; }
  const VarName& var(int i) const { return impl_->vars[i]; }
  const std::vector<VarName>& vars() const { return impl_->vars; }

  std::optional<int> find(const std::string& name) const;

  bool same_ring(const RingSpec& other) const;
  bool operator==(const RingSpec& o) const { return same_ring(o); }

  explicit operator bool() const { return impl_ != nullptr; }

 private:
  struct Impl {
    std::vector<VarName> vars;
    std::unordered_map<std::string, int> index_of;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Ring whose variables are those of `a` followed by those of `b`.
/// Names must stay unique across the concatenation.
RingSpec concat_rings(const RingSpec& a, const RingSpec& b);

}  // namespace tfp
