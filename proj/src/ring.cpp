#include "jacal/ring.hpp"

#include <algorithm>
#include <set>

#include "jacal/error.hpp"

namespace jacal {

RingDescriptor::RingDescriptor(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables)
    throw AlgebraError(AlgebraError::Kind::OutOfRange, "too many variables");
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size())
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "duplicate variable name");
}

int RingDescriptor::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  return it == variables_.end() ? -1 : static_cast<int>(it - variables_.begin());
}

std::string RingDescriptor::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i];
  }
  return s + "] (" + order_.name() + ")";
}

RingRef make_ring(Field field, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const RingDescriptor>(field, std::move(variables), order);
}

bool same_ring(const RingRef& a, const RingRef& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingRef& a, const RingRef& b) {
  if (!same_ring(a, b))
    throw AlgebraError(AlgebraError::Kind::RingMismatch,
                       "ring mismatch: " + (a ? a->to_string() : "<null>") + " vs " +
                           (b ? b->to_string() : "<null>"));
}

}  // namespace jacal
