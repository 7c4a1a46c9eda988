#ifndef ALGX_ERRORS_HPP
#define ALGX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace algx {

// Mathematically invalid input (division by zero polynomial, reducible
// polynomial where an irreducible one is required, ...).
class domain_error : public std::invalid_argument {
public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A work budget (factorization subsets, relation-search height, time) ran
// out.  Distinct from a negative mathematical answer: callers must treat
// this as "unknown", never as "no".
class budget_exceeded : public std::runtime_error {
public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// The precision-escalation cap was reached before a certification
// succeeded.  Never silently returns loose enclosures.
class precision_cap_reached : public std::runtime_error {
public:
  explicit precision_cap_reached(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace algx

#endif
