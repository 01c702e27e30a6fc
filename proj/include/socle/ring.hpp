#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socle/monomial.hpp"
#include "socle/scalar.hpp"

namespace socle {

/// A polynomial ring: coefficient field, named variables, default term order.
/// Rings are immutable and shared; two rings are interchangeable when field
/// and variable list agree (the order is a working detail, not identity).
struct Ring {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex();

  std::size_t nvars() const { return vars.size(); }

  std::optional<std::size_t> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  }

  std::string str() const {
    std::string s = field.str() + "[";
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) s += ",";
      s += vars[i];
    }
    return s + "]";
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Field f, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring>(Ring{std::move(f), std::move(vars), std::move(order)});
}

inline bool same_ring(const Ring& a, const Ring& b) {
  return a.field == b.field && a.vars == b.vars;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && same_ring(*a, *b));
}

}  // namespace socle
