#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pde {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Error categories map onto CLI exit codes.
enum class ErrorKind {
    parse = 2,
    structure = 3,
    missing_file = 4,
    budget = 5,
    numeric = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorKind::parse, msg); }
inline Error structure_error(const std::string& msg) { return Error(ErrorKind::structure, msg); }
inline Error missing_file_error(const std::string& msg) { return Error(ErrorKind::missing_file, msg); }
inline Error budget_error(const std::string& msg) { return Error(ErrorKind::budget, msg); }
inline Error numeric_error(const std::string& msg) { return Error(ErrorKind::numeric, msg); }

}  // namespace pde
