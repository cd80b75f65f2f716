// ode.hpp — adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) for complex
// linear/nonlinear vector fields, with exact landing on requested output times.
#pragma once

#include "drivenq/linalg.hpp"

#include <functional>
#include <vector>

namespace drivenq {

struct StepUnderflow : NumericError {
    using NumericError::NumericError;
};

using VectorField = std::function<ComplexVector(double, const ComplexVector&)>;

struct OdeOptions {
    double rtol = 1e-9;
    double atol = 1e-12;
    double max_step = 0.0;   // 0 = unbounded
    double first_step = 0.0; // 0 = automatic
};

struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexVector> states;
};

// Integrates y' = f(t, y) over [t0, t1]. If dense_grid is non-empty the
// integrator steps exactly onto each grid time (grid must be ascending and
// inside the span) and the trajectory holds those samples; otherwise the
// accepted step points are returned.
Trajectory ode_integrate(const VectorField& f, const ComplexVector& y0, double t0,
                         double t1, const std::vector<double>& dense_grid,
                         const OdeOptions& opt = {});

}  // namespace drivenq
