#include "tfp/ring.hpp"

#include <unordered_map>

#include "tfp/errors.hpp"

namespace tfp {

std::string VarName::str() const {
  std::string s = tag;
  for (int i : indices) {
    s.push_back('_');
    s += std::to_string(i);
  }
  return s;
}

RingSpec RingSpec::create(std::vector<VarName> vars) {
  auto impl = std::make_shared<Impl>();
  std::unordered_map<std::string, size_t> arity;
  for (size_t i = 0; i < vars.size(); ++i) {
    const VarName& v = vars[i];
    if (v.tag.empty() || v.indices.empty())
      throw Error("variable needs a tag and at least one index");
    auto [it, fresh] = arity.emplace(v.tag, v.indices.size());
    if (!fresh && it->second != v.indices.size())
      throw Error("tag '" + v.tag + "' used with two different index arities");
    if (!impl->index_of.emplace(v.str(), static_cast<int>(i)).second)
      throw Error("duplicate variable '" + v.str() + "'");
  }
  impl->vars = std::move(vars);
  RingSpec r;
  r.impl_ = std::move(impl);
  return r;
}

std::optional<int> RingSpec::find(const std::string& name) const {
  if (!impl_) return std::nullopt;
  auto it = impl_->index_of.find(name);
  if (it == impl_->index_of.end()) return std::nullopt;
  return it->second;
}

bool RingSpec::same_ring(const RingSpec& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  return impl_->vars.size() == other.impl_->vars.size() &&
         std::equal(impl_->vars.begin(), impl_->vars.end(), other.impl_->vars.begin());
}

RingSpec concat_rings(const RingSpec& a, const RingSpec& b) {
  std::vector<VarName> vars = a.vars();
  vars.insert(vars.end(), b.vars().begin(), b.vars().end());
  return RingSpec::create(std::move(vars));
}

}  // namespace tfp
