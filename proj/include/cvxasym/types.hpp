#ifndef CVXASYM_TYPES_HPP
#define CVXASYM_TYPES_HPP

#include <Eigen/Dense>

namespace cvxasym {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace cvxasym

#endif
