#include "pde/nonlinearity.hpp"

#include <cmath>

namespace pde {

Nonlinearity::Nonlinearity(Kind kind, double alpha, double beta, std::string id)
    : kind_(kind), alpha_(alpha), beta_(beta), id_(std::move(id)) {
    switch (kind_) {
        case Kind::cubic:
            odd_ = true;
            unit_linear_ = true;
            break;
        case Kind::sinh_st:
            odd_ = true;
            unit_linear_ = false;  // nonlinear dependence on s
            break;
        case Kind::cubic_quintic:
            odd_ = true;
            unit_linear_ = false;  // s-coefficient is t^3 - t, not t
            break;
        case Kind::cubic_ab:
            odd_ = (alpha_ == 0.0);
            unit_linear_ = true;
            break;
    }
}

double Nonlinearity::f(double s, double t) const {
    switch (kind_) {
        case Kind::cubic: return s * t + t * t * t;
        case Kind::sinh_st: return std::sinh(s * t);
        case Kind::cubic_quintic: return (s * t + t * t * t) * (t * t - 1.0);
        case Kind::cubic_ab: return s * t + alpha_ * t * t + beta_ * t * t * t;
    }
    return 0.0;
}

double Nonlinearity::fp(double s, double t) const {
    switch (kind_) {
        case Kind::cubic: return s + 3.0 * t * t;
        case Kind::sinh_st: return s * std::cosh(s * t);
        case Kind::cubic_quintic:
            return (s + 3.0 * t * t) * (t * t - 1.0) + (s * t + t * t * t) * 2.0 * t;
        case Kind::cubic_ab: return s + 2.0 * alpha_ * t + 3.0 * beta_ * t * t;
    }
    return 0.0;
}

double Nonlinearity::F(double s, double t) const {
    switch (kind_) {
        case Kind::cubic: return 0.5 * s * t * t + 0.25 * t * t * t * t;
        case Kind::sinh_st:
            if (std::abs(s) < 1e-8) return 0.5 * s * t * t;  // limit of (cosh(st)-1)/s
            return (std::cosh(s * t) - 1.0) / s;
        case Kind::cubic_quintic: {
            double t2 = t * t;
            return t2 * t2 * t2 / 6.0 + 0.25 * (s - 1.0) * t2 * t2 - 0.5 * s * t2;
        }
        case Kind::cubic_ab:
            return 0.5 * s * t * t + alpha_ * t * t * t / 3.0 + 0.25 * beta_ * t * t * t * t;
    }
    return 0.0;
}

Nonlinearity make_nonlinearity(const std::string& id, double alpha, double beta) {
    if (id == "cubic") return Nonlinearity(Nonlinearity::Kind::cubic, 0, 0, id);
    if (id == "sinh") return Nonlinearity(Nonlinearity::Kind::sinh_st, 0, 0, id);
    if (id == "cubic_quintic") return Nonlinearity(Nonlinearity::Kind::cubic_quintic, 0, 0, id);
    if (id == "cubic_ab") return Nonlinearity(Nonlinearity::Kind::cubic_ab, alpha, beta, id);
    throw parse_error("unknown nonlinearity id: " + id);
}

}  // namespace pde
