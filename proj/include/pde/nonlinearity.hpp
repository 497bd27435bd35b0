#pragma once

#include <string>

#include "pde/common.hpp"

namespace pde {

// One-parameter nonlinearity family f_s with f_s(0) = 0, its t-derivative,
// and its primitive F_s (F_s(0) = 0).
class Nonlinearity {
public:
    enum class Kind { cubic, sinh_st, cubic_quintic, cubic_ab };

    Nonlinearity() = default;
    Nonlinearity(Kind kind, double alpha, double beta, std::string id);

    double f(double s, double t) const;
    double fp(double s, double t) const;
    double F(double s, double t) const;

    bool odd() const { return odd_; }
    // true when f_s(u) = s*u + H(u); then dg/ds = -a analytically
    bool unit_linear_in_s() const { return unit_linear_; }
    const std::string& id() const { return id_; }

private:
    Kind kind_ = Kind::cubic;
    double alpha_ = 0.0, beta_ = 1.0;
    bool odd_ = true;
    bool unit_linear_ = true;
    std::string id_ = "cubic";
};

// ids: "cubic" (st + t^3), "sinh" (sinh(st)),
// "cubic_quintic" ((st + t^3)(t^2 - 1)), "cubic_ab" (st + alpha t^2 + beta t^3)
Nonlinearity make_nonlinearity(const std::string& id, double alpha = 1.0, double beta = 1.0);

}  // namespace pde
