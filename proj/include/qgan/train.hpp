#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgan/grad.hpp"

namespace qgan {

struct TrainConfig {
  Experiment experiment = Experiment::MixedState;
  double alpha_d = 0.8;
  double alpha_g = 0.6;
  int max_steps_d = 50;
  int max_steps_g = 100;
  int max_rounds = 20;
  int max_total_steps = 600;
  GradEngine grad_engine = GradEngine::HadamardTest;
  uint64_t seed = 1;
  double stop_grad_norm = 1e-3;
  double stop_loss_abs = 0.02;
  int shots = 0;  // 0 = analytic
  NoiseModel noise = NoiseModel::disabled();
  bool tomo_fidelity = false;  // measure F through the QST path instead of directly

  EvalOptions eval_options() const;
  void validate() const;  // throws std::invalid_argument with a field diagnostic

  static TrainConfig mixed_state_defaults(uint64_t seed);
  static TrainConfig xor_defaults(uint64_t seed);
};

struct LossReport {
  double v = 0.0;
  std::vector<double> s_r;  // per label
  std::vector<double> s_g;

  double s_r_mean() const;
  double s_g_mean() const;
};

struct StageRecord {
  int round = 0;
  Owner stage = Owner::D;
  int step = 0;
  double v = 0.0;
  std::vector<double> s_r;
  std::vector<double> s_g;
  double f_mean = 0.0;
  uint64_t theta_hash = 0;
  std::vector<double> theta_d;  // snapshot after this step's update
  std::vector<double> theta_g;
};

enum class StopReason { GradNorm, Stationary, LossMet, StepLimit };
std::string stop_reason_name(StopReason r);

struct StageResult {
  ParamVector theta;  // the trained side's updated parameters
  std::vector<StageRecord> records;
  StopReason reason = StopReason::StepLimit;
  /// True when the stage ended at an optimum it can certify: gradient norm
  /// below threshold, or loss stationary after a step that actually moved.
  bool optimal_certificate() const;
};

struct Trajectory {
  std::vector<StageRecord> records;
  ParamVector final_theta_d;
  ParamVector final_theta_g;
  bool converged = false;
  int rounds = 0;
  int total_steps = 0;
  double final_v = 0.0;
  double final_fidelity = 0.0;          // Uhlmann
  double final_fidelity_overlap = 0.0;  // Tr(rho sigma)

  void write_csv(std::ostream& os) const;
  /// Parses the CSV view back (round, stage, step, V, score means, F).
  static std::vector<StageRecord> parse_csv(std::istream& is);
};

// -- objective -----------------------------------------------------------------

/// S^{D,source} = <sigma_z_1>/2 + 1/2 of the assembled circuit.
double score(const ParamVector& theta_d, const ParamVector& theta_g, Source source,
             std::optional<LabelValue> label, Experiment e, const EvalOptions& opts = {});

/// V = mean_n [S_n^{D,R} - S_n^{D,G}]; N = 1 (mixed state) or 4 (XOR labels).
LossReport loss(const ParamVector& theta_d, const ParamVector& theta_g, Experiment e,
                const EvalOptions& opts = {});

/// Mean Uhlmann fidelity between R's and G's data-qubit states (all labels).
double mean_fidelity(const ParamVector& theta_g, Experiment e, bool via_tomography = false);
double mean_overlap_fidelity(const ParamVector& theta_g, Experiment e);

// -- optimization --------------------------------------------------------------

/// One stage of plain gradient ascent (D, on V) or descent (G, on V^2).
StageResult train_stage(Owner side, const ParamVector& theta_d, const ParamVector& theta_g,
                        const TrainConfig& config, int round, int steps_already_used = 0);

/// Alternating adversarial loop, D first each round.
Trajectory run_adversarial(const TrainConfig& config);

/// Random initialization Uniform(0, pi), one counter stream per side.
ParamVector random_init(const AnsatzSpec& spec, uint64_t seed);

}  // namespace qgan
