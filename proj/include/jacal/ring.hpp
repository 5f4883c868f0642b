#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jacal/field.hpp"
#include "jacal/monomial.hpp"

namespace jacal {

/// Polynomial ring k[x_0..x_{n-1}] with a fixed monomial order.
class RingDescriptor {
 public:
  RingDescriptor(Field field, std::vector<std::string> variables, MonomialOrder order);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  /// Index of the named variable, or -1.
  int index_of(const std::string& name) const;

  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.variables_ == b.variables_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingRef = std::shared_ptr<const RingDescriptor>;

RingRef make_ring(Field field, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::grevlex());

bool same_ring(const RingRef& a, const RingRef& b);
/// Throws AlgebraError(RingMismatch) unless same_ring(a, b).
void require_same_ring(const RingRef& a, const RingRef& b);

}  // namespace jacal
