#include "drivenq/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace drivenq {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 5th-order minus embedded 4th-order weights (error estimator, includes FSAL k7).
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                 e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                 e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

double error_norm(const ComplexVector& err, const ComplexVector& y0,
                  const ComplexVector& y1, double rtol, double atol) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
        const double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double q = std::abs(err[i]) / sc;
        acc += q * q;
    }
    return std::sqrt(acc / std::max<double>(1, err.size()));
}

void require_finite_vec(const ComplexVector& v, const char* where) {
    if (!v.allFinite()) throw NonFinite(std::string(where) + ": non-finite value");
}

}  // namespace

Trajectory ode_integrate(const VectorField& f, const ComplexVector& y0, double t0,
                         double t1, const std::vector<double>& dense_grid,
                         const OdeOptions& opt) {
    if (!(t1 > t0)) throw NumericError("ode_integrate: need t1 > t0");
    if (opt.rtol <= 0 || opt.atol <= 0)
        throw NumericError("ode_integrate: tolerances must be positive");
    require_finite_vec(y0, "ode_integrate y0");
    for (size_t i = 0; i < dense_grid.size(); ++i) {
        if (dense_grid[i] < t0 - 1e-12 || dense_grid[i] > t1 + 1e-12)
            throw NumericError("ode_integrate: grid time outside span");
        if (i > 0 && dense_grid[i] <= dense_grid[i - 1])
            throw NumericError("ode_integrate: grid not strictly ascending");
    }

    Trajectory out;
    const bool gridded = !dense_grid.empty();
    size_t next_grid = 0;

    double t = t0;
    ComplexVector y = y0;
    ComplexVector k1 = f(t, y);
    require_finite_vec(k1, "ode_integrate f");

    auto emit = [&](double te, const ComplexVector& ye) {
        out.times.push_back(te);
        out.states.push_back(ye);
    };
    if (gridded) {
        while (next_grid < dense_grid.size() &&
               dense_grid[next_grid] <= t0 + 1e-15 * std::max(1.0, std::abs(t0))) {
            emit(dense_grid[next_grid], y);
            ++next_grid;
        }
    } else {
        emit(t, y);
    }

    const double span = t1 - t0;
    double max_step = opt.max_step > 0 ? opt.max_step : span;
    double h;
    if (opt.first_step > 0) {
        h = opt.first_step;
    } else {
        const double d0 = y.norm() + opt.atol;
        const double d1 = k1.norm();
        h = d1 > 0 ? 0.01 * d0 / d1 : span / 100.0;
        h = std::min(h, span / 10.0);
    }
    h = std::min(h, max_step);

    const double hfloor_rel = 16.0 * std::numeric_limits<double>::epsilon();
    ComplexVector k2, k3, k4, k5, k6, k7, y5, err;

    while (t < t1 - 1e-14 * std::max(1.0, std::abs(t1))) {
        // Land exactly on the next grid time and on t1.
        double target = t1;
        if (gridded && next_grid < dense_grid.size())
            target = std::min(target, dense_grid[next_grid]);
        bool clipped = false;
        double hstep = h;
        if (t + hstep >= target) {
            hstep = target - t;
            clipped = true;
        }

        k2 = f(t + c2 * hstep, y + hstep * (a21 * k1));
        k3 = f(t + c3 * hstep, y + hstep * (a31 * k1 + a32 * k2));
        k4 = f(t + c4 * hstep, y + hstep * (a41 * k1 + a42 * k2 + a43 * k3));
        k5 = f(t + c5 * hstep, y + hstep * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        k6 = f(t + hstep,
               y + hstep * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        y5 = y + hstep * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        k7 = f(t + hstep, y5);
        require_finite_vec(k7, "ode_integrate f");
        err = hstep * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double en = error_norm(err, y, y5, opt.rtol, opt.atol);
        if (en <= 1.0) {
            t += hstep;
            y = y5;
            k1 = k7;  // FSAL
            if (gridded) {
                while (next_grid < dense_grid.size() &&
                       dense_grid[next_grid] <= t + 1e-14 * std::max(1.0, std::abs(t))) {
                    emit(dense_grid[next_grid], y);
                    ++next_grid;
                }
            } else {
                emit(t, y);
            }
            double fac = en > 0 ? 0.9 * std::pow(en, -0.2) : 5.0;
            fac = std::clamp(fac, 0.2, 5.0);
            if (!clipped) h = hstep * fac;
            else h = std::max(h, hstep * fac);
            h = std::min(h, max_step);
        } else {
            const double fac = std::clamp(0.9 * std::pow(en, -0.2), 0.1, 0.9);
            h = hstep * fac;
            if (h < hfloor_rel * std::max(std::abs(t), 1.0))
                throw StepUnderflow("ode_integrate: step size underflow at t = " +
                                    std::to_string(t));
        }
    }
    if (gridded) {
        while (next_grid < dense_grid.size()) {  // trailing == t1 times
            emit(dense_grid[next_grid], y);
            ++next_grid;
        }
    }
    return out;
}

}  // namespace drivenq
