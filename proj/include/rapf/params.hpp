#pragma once

#include <cstdint>

namespace rapf {

enum class Spin : std::uint8_t { CCW, CW };

// Every tunable of the potential fields and the planning loops.
// Quadratic field: J_a = 1/2 k_a d^2, J_o = 1/2 k_rep (1/d - 1/rho_0)^2
// inside the influence radius. Gaussian field: J_a = -alpha_a exp(-mu_a d^2),
// J_o = alpha_o exp(-mu_o d^2) between rho_l and rho_u, infinite below rho_l.
struct PlannerParams {
    double k_a = 1.0;
    double k_rep = 12000.0;
    double rho_0 = 0.25;   // quad influence radius; planners add it to the contact radius
    double alpha_a = 10.0;
    double mu_a = 0.002;
    double alpha_o = 2.0;
    double mu_o = 8.0;
    double rho_l = 0.05;   // gauss lower radius when used as-is
    double rho_u = 1.0;    // gauss upper radius; annulus width in changing-radii mode
    int n_bacteria = 8;
    double rho_b = 0.2;        // bacteria ring radius, also the bacteria hop length
    double step_size = 0.01;   // descent step and walk step, metres
    double max_time = 10.0;    // wall-clock planning budget per invocation, seconds
    double goal_margin = 0.5;  // plan terminates within this distance of the target
    int rw_steps = 10;         // random-walk hops per local-minimum escape
    int max_artificial = 50;   // artificial obstacles per invocation before NoPath
    Spin spin = Spin::CCW;
    double astar_grid_cell = 0.1;
    long max_plan_steps = 200000;  // deterministic cap backing the wall-clock budget
};

// Throws std::invalid_argument naming the offending field.
void validate(const PlannerParams& p);

}  // namespace rapf
