#pragma once

#include <optional>
#include <vector>

#include "qgan/gates.hpp"
#include "qgan/qsim.hpp"

namespace qgan {

enum class Experiment { MixedState, Xor };
enum class Owner { G, D };
enum class Axis { X, Z };
enum class Source { R, G };

std::string experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& s);

/// Fixed role assignment of the five device qubits (Fig-1c wiring).
struct RegisterLayout {
  static constexpr int ancilla = 0;
  static constexpr int label0 = 1;
  static constexpr int label1 = 2;
  static constexpr int data = 3;
  static constexpr int gen_label0 = 3;
  static constexpr int gen_label1 = 4;
  static constexpr int score = 1;  // D's output score lives in <sigma_z> here
  static constexpr int n_total = 5;
};

struct ParamKey {
  int qubit;
  int layer;  // 1-based, matching theta_{j,l,m}
  Axis axis;
  Owner owner;

  bool operator==(const ParamKey&) const = default;
};

/// Flat trainable parameter set with the (j, l, axis, m) index map.
struct ParamVector {
  std::vector<double> values;
  std::vector<ParamKey> keys;  // aligned with values

  int size() const { return static_cast<int>(values.size()); }
  int index_of(const ParamKey& key) const;  // throws if absent
  double norm() const;
  uint64_t hash() const;
};

/// Shape of one side's layered ansatz. mixed_minimal marks the mixed-state
/// generator: a single layer carrying only the two X-rotation angles.
struct AnsatzSpec {
  Owner owner;
  int layers = 0;
  std::vector<int> qubits;
  CouplingSpec entangler;
  bool mixed_minimal = false;

  int param_count() const;
  ParamVector make_params(double fill = 0.0) const;

  static AnsatzSpec generator(Experiment e);
  static AnsatzSpec discriminator(Experiment e);
};

/// Two classical input bits.
struct LabelValue {
  int x = 0;
  int y = 0;

  int parity() const { return x ^ y; }
  std::string str() const { return std::to_string(x) + std::to_string(y); }
  static std::vector<LabelValue> all() { return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }
};

// -- fixed reference data -----------------------------------------------------

/// Angles of the rho_R preparation circuit (Fig. 2a inset).
inline constexpr double kRhoRAngleQ3 = 1.35;
inline constexpr double kRhoRAngleQ4 = 0.68;
inline constexpr double kLambda2qMHz = -2.48;
inline constexpr double kLambda3qMHz = -2.27;

/// The rho_R preparation circuit on qubits {3, 4}.
Circuit rho_r_prep_circuit();

/// The as-printed experimentally measured rho_R, kept for comparison; the
/// training target is the ideal circuit output (see real_source).
DensityMatrix paper_rho_r();

/// ParamVector holding the generator angles that reproduce rho_R exactly.
ParamVector rho_r_generator_params();

// -- circuit builders ----------------------------------------------------------

Circuit build_generator(const AnsatzSpec& spec, const ParamVector& theta_g,
                        std::optional<LabelValue> label);
Circuit build_discriminator(const AnsatzSpec& spec, const ParamVector& theta_d);

/// Data-register state of the real source: mixed-state experiment -> the
/// 2x2 rho_R (ideal circuit output) on qubit 3; XOR -> |x^y><x^y|.
DensityMatrix real_source(Experiment e, std::optional<LabelValue> label);

/// A full training sequence: 5-qubit initial state (branches give a pure-state
/// decomposition of it) plus the gate program ending right before the score
/// measurement.
struct TrainingCircuit {
  Circuit circuit;  // over RegisterLayout::n_total qubits
  std::vector<std::pair<double, StateVector>> initial_branches;

  DensityMatrix initial_density() const;
};

/// source=R injects R's state into the initial density matrix by default;
/// inject_r=false routes R through its preparation circuit instead (the two
/// paths are equivalent and tested as such).
TrainingCircuit assemble_training_circuit(Source source, Experiment e,
                                          std::optional<LabelValue> label,
                                          const ParamVector& theta_g,
                                          const ParamVector& theta_d,
                                          bool inject_r = true);

/// G's reduced output state on the data qubit for this label.
DensityMatrix generator_data_state(const ParamVector& theta_g, Experiment e,
                                   std::optional<LabelValue> label);

}  // namespace qgan
