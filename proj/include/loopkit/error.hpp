#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace loopkit {

class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

class NotBijective : public Error {
public:
  explicit NotBijective(const std::string& message) : Error("not_bijective", message) {}
};

class DegreeMismatch : public Error {
public:
  explicit DegreeMismatch(const std::string& message) : Error("degree_mismatch", message) {}
};

class OrderTooLarge : public Error {
public:
  OrderTooLarge(int order, int guard)
      : Error("order_too_large",
              "order " + std::to_string(order) + " exceeds guard " + std::to_string(guard)),
        order_(order),
        guard_(guard) {}

  int order() const { return order_; }
  int guard() const { return guard_; }

private:
  int order_;
  int guard_;
};

class NotAnIsotopism : public Error {
public:
  explicit NotAnIsotopism(const std::string& message) : Error("not_an_isotopism", message) {}
};

class HypothesisUnmet : public Error {
public:
  explicit HypothesisUnmet(const std::string& message) : Error("hypothesis_unmet", message) {}
};

}  // namespace loopkit
