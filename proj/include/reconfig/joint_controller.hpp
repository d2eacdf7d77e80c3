// Copyright 2026 The reconfig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Scalar setpoint controller for a prismatic or revolute joint, with the
// position error split into five intervals: full speed beyond the slow band,
// half speed inside it, and zero inside the +/-accuracy dead band. The
// controller itself is pure; the discrete plant lives only in settle().
// Lengths are in metres, speeds in metres per second.

namespace reconfig {

struct ControllerConfig {
  double accuracy = 50e-6;   // dead band half-width: 50 micrometres
  double slow_band = 500e-6; // half-speed band half-width
  double vel = 0.0;          // full speed, must be positive
  double dt = 0.0;           // plant time step for settle(), must be positive
};

namespace detail {

inline void check_controller_config(const ControllerConfig& cfg) {
  if (!(cfg.accuracy > 0.0) || !(cfg.slow_band > cfg.accuracy)) {
    throw std::invalid_argument(
        "controller config: need 0 < accuracy < slow_band");
  }
  if (!(cfg.vel > 0.0)) {
    throw std::invalid_argument("controller config: vel must be positive");
  }
  if (!(cfg.dt > 0.0)) {
    throw std::invalid_argument("controller config: dt must be positive");
  }
}

}  // namespace detail

/// Signed joint velocity for the current position error e = target - position:
///   e >  slow_band             -> +vel
///   accuracy < e <= slow_band  -> +vel/2
///   |e| <= accuracy            ->  0
///   -slow_band <= e < -accuracy-> -vel/2
///   e < -slow_band             -> -vel
inline double control_velocity(double position, double target,
                               const ControllerConfig& cfg) {
  detail::check_controller_config(cfg);
  const double e = target - position;
  if (e > cfg.slow_band) return cfg.vel;
  if (e > cfg.accuracy) return cfg.vel / 2.0;
  if (e >= -cfg.accuracy) return 0.0;
  if (e >= -cfg.slow_band) return -cfg.vel / 2.0;
  return -cfg.vel;
}

/// Simulates position += control_velocity * dt until the error enters the
/// dead band; returns the step count. Requires vel*dt < 2*accuracy so a step
/// cannot jump across the dead band (guarantees termination).
inline int settle(double start, double target, const ControllerConfig& cfg) {
  detail::check_controller_config(cfg);
  if (!(cfg.vel * cfg.dt < 2.0 * cfg.accuracy)) {
    throw std::invalid_argument(
        "settle: vel*dt must be below 2*accuracy to avoid a limit cycle");
  }
  double position = start;
  int steps = 0;
  while (std::abs(target - position) > cfg.accuracy) {
    position += control_velocity(position, target, cfg) * cfg.dt;
    ++steps;
  }
  return steps;
}

}  // namespace reconfig
