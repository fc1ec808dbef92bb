#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qgan/ansatz.hpp"
#include "qgan/noise.hpp"

namespace qgan {

enum class GradEngine { HadamardTest, ParamShift, FiniteDiff };

std::string grad_engine_name(GradEngine e);
GradEngine grad_engine_from_name(const std::string& s);

/// Evaluation context shared by the engines. shots = 0 means analytic
/// expectation values; with shots > 0, <sigma_z> is binomially sampled from a
/// counter-based stream keyed by (seed, sample_stream, counters).
struct EvalOptions {
  const NoiseModel* noise = nullptr;
  double delay_ns = 0.0;  // ancilla idle between the two controlled gates
  int shots = 0;
  uint64_t seed = 0;
  uint64_t sample_stream = 0;

  bool noisy() const { return noise != nullptr && noise->enabled; }
};

struct GradOptions {
  GradEngine engine = GradEngine::HadamardTest;
  double fd_step = 1e-5;
  EvalOptions eval;
};

/// <sigma_z> on `qubit` after running the training circuit.
double expect_sz(const TrainingCircuit& tc, int qubit, const EvalOptions& opts = {});

/// d<sigma_z_1>/d theta_k via the ancilla construction: H on Q0, controlled
/// generator right after parameter k's rotation, controlled-Z on the score
/// qubit after D, then H and X/2 on Q0; returns -<sigma_z_0>.
double hadamard_test_gradient(const TrainingCircuit& tc, int param_index,
                              const EvalOptions& opts = {});

/// (<sz_1>(theta + pi/2) - <sz_1>(theta - pi/2)) / 2 for parameter k.
double parameter_shift_gradient(const TrainingCircuit& tc, int param_index,
                                const EvalOptions& opts = {});

/// Central difference of <sz_1> in parameter k.
double finite_difference_circuit_gradient(const TrainingCircuit& tc, int param_index,
                                          double step, const EvalOptions& opts = {});

/// Dispatch on opts.engine.
double circuit_gradient(const TrainingCircuit& tc, int param_index, const GradOptions& opts);

struct GradVector {
  std::vector<double> values;
  GradEngine engine = GradEngine::FiniteDiff;

  double norm() const;
};

using LossFn = std::function<double(const ParamVector&)>;

/// Central differences of an arbitrary scalar loss over every parameter.
GradVector finite_difference_gradient(const LossFn& loss, const ParamVector& theta, double step);

/// Gradient of the training objective: side=D -> grad_{theta_D} V;
/// side=G -> grad_{theta_G} V^2 = 2 V grad_{theta_G} V. Per-sample,
/// per-parameter engine calls; all parameters evaluated from the same theta
/// snapshot (and in parallel).
GradVector loss_gradient(Owner side, const ParamVector& theta_d, const ParamVector& theta_g,
                         Experiment e, const GradOptions& opts);

}  // namespace qgan
