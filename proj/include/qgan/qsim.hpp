#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qgan {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 6;

/// Pure n-qubit state, amplitudes indexed with qubit 0 as the most
/// significant bit: |q0 q1 ... q_{n-1}>.
struct StateVector {
  int n_qubits = 0;
  CVec amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
};

/// Mixed n-qubit state. Same bit ordering as StateVector.
struct DensityMatrix {
  int n_qubits = 0;
  CMat elements;

  std::size_t dim() const { return elements.rows(); }
  static DensityMatrix from_pure(const StateVector& psi);
};

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Paulis, one letter per qubit
/// (letters[0] acts on qubit 0, the most significant).
struct PauliString {
  std::vector<Pauli> letters;

  int n_qubits() const { return static_cast<int>(letters.size()); }
  CMat matrix() const;
  std::string str() const;

  static PauliString identity(int n);
  static PauliString single(int n, int qubit, Pauli p);
  static PauliString parse(const std::string& s);
};

/// Dense unitary on k qubits (dimension 2^k).
struct Unitary {
  CMat elements;

  int n_qubits() const;
  std::size_t dim() const { return elements.rows(); }
};

// -- state construction -------------------------------------------------

StateVector ground_state(int n);
DensityMatrix ground_density(int n);

// -- operator application ------------------------------------------------

/// Embeds a k-qubit unitary into the full space. targets[0] is the most
/// significant qubit of u's local index.
CMat embed_unitary(const CMat& u, const std::vector<int>& targets, int n_qubits);

void apply_unitary(StateVector& state, const Unitary& u, const std::vector<int>& targets);
void apply_unitary(DensityMatrix& state, const Unitary& u, const std::vector<int>& targets);

/// Applies 2x2 Kraus operators {K_i} to one qubit of a density matrix:
/// rho -> sum_i K_i rho K_i^dag.
void apply_kraus_1q(DensityMatrix& rho, const std::vector<Eigen::Matrix2cd>& kraus, int qubit);

// -- measurement-side quantities ------------------------------------------

double expectation(const StateVector& state, const PauliString& p);
double expectation(const DensityMatrix& state, const PauliString& p);

/// Probability of reading 1 on `qubit` in the computational basis.
double prob_one(const StateVector& state, int qubit);
double prob_one(const DensityMatrix& state, int qubit);

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// -- matrix functions -----------------------------------------------------

/// e^{-i h t} for Hermitian h, via eigendecomposition (exact at these sizes).
Unitary matrix_exponential(const CMat& h, double t);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho sigma) — the cyclicity-reduced form of the overlap expression;
/// agrees with state_fidelity when either argument is pure.
double overlap_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// -- checks ----------------------------------------------------------------

bool is_hermitian(const CMat& m, double tol = 1e-10);
bool is_unitary(const CMat& m, double tol = 1e-10);
void validate_state(const StateVector& s);     // norm, size
void validate_state(const DensityMatrix& r);   // hermiticity, trace, PSD

}  // namespace qgan
