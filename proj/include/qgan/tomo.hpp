#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgan/qsim.hpp"

namespace qgan {

/// Process matrix in the tensor-Pauli basis {I,X,Y,Z}^(x)n, lexicographic with
/// the leftmost qubit most significant: chi index a encodes base-4 digits
/// (I=0, X=1, Y=2, Z=3).
struct ChiMatrix {
  int n_qubits = 0;
  CMat elements;  // 4^n x 4^n

  std::size_t dim() const { return elements.rows(); }
};

/// Pauli string for basis index a of an n-qubit chi matrix.
PauliString pauli_basis_string(int index, int n);
std::string pauli_basis_label(int index, int n);

/// The 6^n tomography preparations {I, +X/2, -X/2, +Y/2, -Y/2, X}^(x)n applied
/// to |0...0>, in lexicographic order of the listed operators.
std::vector<StateVector> tomo_input_set(int n);
int tomo_input_count(int n);

using StateAccessor = std::function<double(const PauliString&)>;
using Process = std::function<DensityMatrix(const DensityMatrix&)>;

/// rho = 2^{-n} sum_P <P> P over all 4^n Pauli strings. Eigenvalues are
/// clipped at 0 and the state renormalized if sampling noise drove them
/// negative.
DensityMatrix qst(const StateAccessor& accessor, int n);

/// Convenience accessor for a concrete state.
StateAccessor accessor_of(const DensityMatrix& rho);

/// Linear-inversion QPT from the full 6^n input set; outputs pass through qst.
ChiMatrix qpt(const Process& process, int n);

/// chi of a unitary channel: chi_ab = c_a c_b* with U = sum_a c_a P_a,
/// normalized to unit trace.
ChiMatrix ideal_chi(const Unitary& u);

/// Re Tr(chi_exp chi_id), clipped to [0, 1].
double process_fidelity(const ChiMatrix& chi_exp, const ChiMatrix& chi_id);

/// JSON export: basis labels plus complex entries as [re, im] pairs.
void write_chi_json(std::ostream& os, const ChiMatrix& chi);

}  // namespace qgan
