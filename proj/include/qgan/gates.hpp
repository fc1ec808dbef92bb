#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgan/qsim.hpp"

namespace qgan {

enum class GateKind {
  RX,
  RZ,
  H,
  X_HALF,
  X,
  U_ENT,
  U_PHASE,
  CNOT,
  CZ,
  CONTROLLED_RX_GEN,  // controlled-sigma_x insertion for the gradient subroutine
  CONTROLLED_RZ_GEN,  // controlled-sigma_z insertion
  DELAY,              // identity; duration consumed by the noise model
};

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/// Bus coupling of the entangler. lambda is given as lambda/2pi in MHz
/// (signed, negative on this device), tau in ns.
struct CouplingSpec {
  double lambda_over_2pi_mhz = 0.0;
  double tau_ns = 0.0;

  /// lambda * tau, dimensionless (lambda in rad/ns).
  double lambda_tau() const;

  /// tau = pi / (4 |lambda|), so that lambda*tau = sign(lambda) * pi/4.
  static CouplingSpec quarter_period(double lambda_over_2pi_mhz);
};

/// One gate instruction. For two-qubit controlled kinds targets = {control,
/// target}; for U_ENT all participating qubits. theta only for rotation
/// kinds, lambda_tau only for U_ENT.
struct GateOp {
  GateKind kind;
  std::vector<int> targets;
  double theta = 0.0;
  double lambda_tau = 0.0;
  double duration_ns = 0.0;  // filled from default_duration_ns when 0
  int param_index = -1;      // index into the owning ParamVector, -1 if fixed

  static GateOp rotation(char axis, int qubit, double theta, int param_index = -1);
  static GateOp ent(const std::vector<int>& qubits, const CouplingSpec& spec);
};

double default_duration_ns(GateKind kind, int n_targets);

/// Ordered gate program over a fixed-width register.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> gates;

  void append(GateOp op);
  void append(const Circuit& other);

  /// One gate per line: KIND q0[,q1,...] [theta=... | lambda_tau=...]
  std::string to_text() const;
  static Circuit from_text(const std::string& text, int n_qubits);
};

// -- gate matrices ----------------------------------------------------------

/// e^{-i theta sigma_axis / 2}, axis in {'x', 'z'}. Half-angle convention
/// project-wide.
Unitary rotation_matrix(char axis, double theta);

Unitary hadamard();
Unitary pauli_x();

/// Exchange entangler e^{-i H tau} with H = sum_{j<k} lambda (s+_j s-_k +
/// s-_j s+_k), uniform lambda. qubits.size() in {2, 3}.
Unitary u_ent(const std::vector<int>& qubits, const CouplingSpec& spec);
Unitary u_ent_lambda_tau(int n_qubits, double lambda_tau);

/// Heterogeneous override: one lambda*tau per pair, ordered (0,1),(0,2),(1,2).
Unitary u_ent_hetero(int n_qubits, const std::vector<double>& lambda_tau_per_pair);

/// The device's native two-qubit phase gate: diag(1, -i, -i, 1).
Unitary u_phase();

Unitary cnot();
Unitary cz();

/// CNOT realized as U_phase plus six single-qubit RX/RZ gates (the hardware
/// composition); equals cnot() up to global phase.
Unitary composed_cnot();
/// CZ = (I (x) H) CNOT (I (x) H) over the composed CNOT: U_phase plus eight
/// single-qubit gates.
Unitary composed_cz();
std::vector<GateOp> composed_cnot_ops(int control, int target);
std::vector<GateOp> composed_cz_ops(int control, int target);

/// Local matrix of one instruction (DELAY -> identity).
Unitary gate_unitary(const GateOp& op);

// -- ideal execution ---------------------------------------------------------

void run_circuit(StateVector& state, const Circuit& c);
void run_circuit(DensityMatrix& state, const Circuit& c);

/// Full 2^n x 2^n matrix of the circuit (product of embedded gates).
CMat circuit_matrix(const Circuit& c);

}  // namespace qgan
