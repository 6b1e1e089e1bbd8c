#pragma once

#include "yamabe/spaces.hpp"

#include <span>
#include <vector>

namespace yamabe {

/// One point of a trajectory of the reduced second-order equation, in
/// first-order form: w = u - 1 and its derivative.
struct OdeState {
    double r = 0.0;
    double phi = 0.0;
    double dphi = 0.0;
};

struct IntegratorConfig {
    double eps_endpoint = 1e-6;  // offset of the shooting starts from r = 0 and pi/2
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 200000;
};

inline void validate(const IntegratorConfig& cfg) {
    if (!(cfg.eps_endpoint > 0.0) || !(cfg.eps_endpoint < pi / 4.0))
        throw std::invalid_argument("integrator: eps_endpoint must lie in (0, pi/4)");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("integrator: tolerances must be positive");
    if (cfg.max_steps < 1) throw std::invalid_argument("integrator: max_steps must be >= 1");
}

enum class ShotStatus { ok, positivity_violation, step_limit };

struct ShotResult {
    OdeState state;
    ShotStatus status = ShotStatus::ok;
    bool ok() const { return status == ShotStatus::ok; }
};

struct SamplePoint {
    double r = 0.0;
    double w = 0.0;
    double dw = 0.0;
};

using ProfileSamples = std::vector<SamplePoint>;

/// Second-order regular start at the singular endpoint r = 0:
/// w(h) = a + G(a) h^2 / (2 (1 + c0)), w'(h) = G(a) h / (1 + c0),
/// with c0 = A - B the residue of the drift at 0.
OdeState taylor_start_zero(const ProblemSpec& problem, double a, double h);

/// Mirror start at r = pi/2, where the drift behaves like -B/(pi/2 - r):
/// w(pi/2 - h) = b + G(b) h^2 / (2 (1 + B)), w'(pi/2 - h) = -G(b) h / (1 + B).
OdeState taylor_start_pi2(const ProblemSpec& problem, double b, double h);

/// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) solve of
/// w'' = -drift(r) w' + G(w) from `from` to r_target, either direction.
/// Deterministic for fixed inputs. Leaving w <= -1 is reported as a
/// positivity violation, not thrown: scans use it to discard shots.
ShotResult integrate(const ProblemSpec& problem, const OdeState& from, double r_target,
                     const IntegratorConfig& cfg);

/// Same flow, but lands exactly on each node in turn (nodes monotone in the
/// direction of travel) and appends (r, w, w') at every node, including the
/// starting state's node if it is the first entry.
ShotResult integrate_path(const ProblemSpec& problem, const OdeState& from,
                          std::span<const double> nodes, const IntegratorConfig& cfg,
                          ProfileSamples& out);

/// Taylor start at eps, then integrate to r_target.
ShotResult shoot_from_zero(const ProblemSpec& problem, double a, double r_target,
                           const IntegratorConfig& cfg);
ShotResult shoot_from_pi2(const ProblemSpec& problem, double b, double r_target,
                          const IntegratorConfig& cfg);

/// Piecewise cubic Hermite interpolant of a sampled trajectory (ascending r).
/// With the dense grids produced by the solvers the interpolation error is
/// orders of magnitude below the integrator tolerances.
class ProfileInterpolant {
public:
    explicit ProfileInterpolant(const ProfileSamples& samples);
    double w(double r) const;
    double dw(double r) const;
    double r_min() const { return samples_.front().r; }
    double r_max() const { return samples_.back().r; }

private:
    const SamplePoint& segment_start(double r, double& t, double& h) const;
    ProfileSamples samples_;
};

enum class Endpoint { zero, pi_half };

/// Linearized flow v'' = -drift v' + G'(w(r)) v around a base trajectory,
/// started regularly (v = 1, v' from the Taylor expansion with G replaced by
/// G') at the chosen endpoint; returns (v, v') at r = pi/4.
/// `endpoint_value` is w of the base solution at that endpoint (a or b).
ShotResult integrate_linearized(const ProblemSpec& problem, const ProfileInterpolant& base,
                                double endpoint_value, Endpoint from, const IntegratorConfig& cfg);

/// Same around the trivial solution w == 0, where the coefficient is the
/// constant -lambda (q - 2); no base profile needed.
ShotResult integrate_linearized_trivial(const ProblemSpec& problem, Endpoint from,
                                        const IntegratorConfig& cfg);

}  // namespace yamabe
