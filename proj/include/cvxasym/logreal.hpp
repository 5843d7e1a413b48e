#ifndef CVXASYM_LOGREAL_HPP
#define CVXASYM_LOGREAL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cvxasym {

/// Nonnegative quantity stored as its natural logarithm.
/// Zero is encoded as log = -infinity.  No sign is carried: everything this
/// type stores (volumes, mixed volumes, series terms) is nonnegative, and
/// signed arithmetic happens in plain doubles after exponentiation.
class LogReal {
 public:
  LogReal() : log_(-std::numeric_limits<double>::infinity()) {}

  static LogReal from_log(double l) {
    LogReal r;
    r.log_ = l;
    return r;
  }

  static LogReal from_value(double v) {
    if (std::isnan(v) || v < 0.0)
      throw std::domain_error("LogReal: value must be nonnegative");
    return from_log(std::log(v));
  }

  double log() const { return log_; }
  double value() const { return std::exp(log_); }
  bool is_zero() const { return std::isinf(log_) && log_ < 0.0; }

  LogReal operator*(LogReal o) const { return from_log(log_ + o.log_); }
  LogReal operator/(LogReal o) const {
    if (o.is_zero()) throw std::domain_error("LogReal: division by zero");
    return from_log(log_ - o.log_);
  }
  LogReal pow(double e) const { return from_log(log_ * e); }

  bool operator<(LogReal o) const { return log_ < o.log_; }
  bool operator==(LogReal o) const { return log_ == o.log_; }

 private:
  double log_;
};

}  // namespace cvxasym

#endif
