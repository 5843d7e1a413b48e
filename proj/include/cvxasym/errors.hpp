#ifndef CVXASYM_ERRORS_HPP
#define CVXASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvxasym {

// Preconditions on arguments throw std::domain_error directly.
// The types below exist so callers can distinguish recoverable failure modes.

// Input has no interior / insufficient rank (coplanar hull input, all-zero rows).
class degeneracy_error : public std::runtime_error {
 public:
  explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Iteration cap reached before the stopping criterion.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Problem data admits no solution (negative discriminant, hopeless rejection rate).
class infeasibility_error : public std::runtime_error {
 public:
  explicit infeasibility_error(const std::string& what) : std::runtime_error(what) {}
};

// A closed form was evaluated outside the regime where its derivation holds;
// the caller should fall back to a numeric solver.
class validity_error : public std::runtime_error {
 public:
  explicit validity_error(const std::string& what) : std::runtime_error(what) {}
};

// A numeric oracle detected more than one candidate optimum.
class ambiguity_error : public std::runtime_error {
 public:
  explicit ambiguity_error(const std::string& what) : std::runtime_error(what) {}
};

// The unit-square chord formula denominator vanished (line through a corner).
class formula_degenerate_error : public std::runtime_error {
 public:
  explicit formula_degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// Geometric routine failed (bracket not found, unsupported section pair).
class geometry_error : public std::runtime_error {
 public:
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvxasym

#endif
