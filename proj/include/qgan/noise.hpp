#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qgan/gates.hpp"
#include "qgan/qsim.hpp"

namespace qgan {

struct QubitNoise {
  double t1_us = 0.0;
  double t2_star_us = 0.0;
  double f0 = 1.0;  // P(read 0 | prepared 0)
  double f1 = 1.0;  // P(read 1 | prepared 1)
};

/// Device decoherence and readout parameters, one entry per qubit.
struct NoiseModel {
  std::vector<QubitNoise> qubits;
  bool enabled = false;
  bool dd_protected_idle = false;
  double depolarizing_per_gate = 0.0;  // optional sensitivity knob, off by default

  const QubitNoise& qubit(int j) const;

  /// Table-S1 device preset, enabled.
  static NoiseModel table_s1();
  static NoiseModel disabled();
};

/// Amplitude damping (p = 1 - e^{-t/T1}) followed by pure dephasing with
/// 1/Tphi = 1/T2* - 1/(2 T1), as single-qubit Kraus channels.
DensityMatrix apply_decoherence(const DensityMatrix& rho, int qubit, double duration_ns,
                                const NoiseModel& model);

/// Ideal unitary, then decoherence on each participating qubit for the gate's
/// duration. DELAY applies decoherence only; dd_protected_idle suppresses its
/// dephasing part.
DensityMatrix noisy_apply(const DensityMatrix& rho, const GateOp& op, const NoiseModel& model);

/// Runs a circuit, dispatching per gate on model (null or disabled -> ideal).
DensityMatrix run_circuit_noisy(DensityMatrix rho, const Circuit& c, const NoiseModel* model);

// -- readout ------------------------------------------------------------------

/// Column-stochastic confusion matrix [[F0, 1-F1], [1-F0, F1]].
struct AssignmentMatrix {
  double f0 = 1.0;
  double f1 = 1.0;

  static AssignmentMatrix for_qubit(const NoiseModel& model, int qubit);
};

using ProbPair = std::pair<double, double>;  // (p0, p1)

/// Forward application of the confusion matrix: true probs -> measured probs.
ProbPair readout_perturb(const ProbPair& true_probs, const AssignmentMatrix& a);

/// Inverse assignment-matrix correction, clipped to [0,1] and renormalized if
/// the inversion overshoots. Throws if F0 + F1 = 1 (singular).
ProbPair readout_correct(const ProbPair& measured, const AssignmentMatrix& a);

std::vector<ProbPair> readout_correct(const std::vector<ProbPair>& measured,
                                      const std::vector<AssignmentMatrix>& matrices);

}  // namespace qgan
