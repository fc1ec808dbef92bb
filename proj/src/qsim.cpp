#include "qgan/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgan {

namespace {

constexpr Complex kI{0.0, 1.0};

int bit_shift(int qubit, int n) { return n - 1 - qubit; }

void check_targets(const std::vector<int>& targets, int n) {
  if (targets.empty()) throw std::invalid_argument("no target qubits");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n)
      throw std::invalid_argument("target qubit out of range");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j]) throw std::invalid_argument("duplicate target qubit");
  }
}

// Per-basis-state action of a Pauli string: P|i> = phase(i) |i ^ flip>.
struct PauliAction {
  std::size_t flip_mask = 0;
  std::vector<Pauli> letters;
  int n = 0;

  explicit PauliAction(const PauliString& p) : letters(p.letters), n(p.n_qubits()) {
    for (int q = 0; q < n; ++q) {
      Pauli l = letters[q];
      if (l == Pauli::X || l == Pauli::Y) flip_mask |= std::size_t{1} << bit_shift(q, n);
    }
  }

  Complex phase(std::size_t index) const {
    Complex ph{1.0, 0.0};
    for (int q = 0; q < n; ++q) {
      int bit = (index >> bit_shift(q, n)) & 1;
      switch (letters[q]) {
        case Pauli::I:
        case Pauli::X:
          break;
        case Pauli::Y:
          ph *= bit ? -kI : kI;
          break;
        case Pauli::Z:
          if (bit) ph = -ph;
          break;
      }
    }
    return ph;
  }
};

}  // namespace

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  DensityMatrix rho;
  rho.n_qubits = psi.n_qubits;
  rho.elements = psi.amplitudes * psi.amplitudes.adjoint();
  return rho;
}

CMat PauliString::matrix() const {
  static const CMat singles[4] = {
      (CMat(2, 2) << 1, 0, 0, 1).finished(),
      (CMat(2, 2) << 0, 1, 1, 0).finished(),
      (CMat(2, 2) << 0, -kI, kI, 0).finished(),
      (CMat(2, 2) << 1, 0, 0, -1).finished(),
  };
  CMat out = CMat::Identity(1, 1);
  for (Pauli l : letters) {
    const CMat& s = singles[static_cast<int>(l)];
    CMat next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * s;
    out = std::move(next);
  }
  return out;
}

std::string PauliString::str() const {
  static const char names[] = "IXYZ";
  std::string s;
  for (Pauli l : letters) s.push_back(names[static_cast<int>(l)]);
  return s;
}

PauliString PauliString::identity(int n) {
  return PauliString{std::vector<Pauli>(n, Pauli::I)};
}

PauliString PauliString::single(int n, int qubit, Pauli p) {
  PauliString out = identity(n);
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("pauli qubit out of range");
  out.letters[qubit] = p;
  return out;
}

PauliString PauliString::parse(const std::string& s) {
  PauliString out;
  for (char c : s) {
    switch (c) {
      case 'I': out.letters.push_back(Pauli::I); break;
      case 'X': out.letters.push_back(Pauli::X); break;
      case 'Y': out.letters.push_back(Pauli::Y); break;
      case 'Z': out.letters.push_back(Pauli::Z); break;
      default: throw std::invalid_argument("bad pauli letter");
    }
  }
  return out;
}

int Unitary::n_qubits() const {
  std::size_t d = dim();
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

StateVector ground_state(int n) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range [1, 6]");
  StateVector s;
  s.n_qubits = n;
  s.amplitudes = CVec::Zero(std::size_t{1} << n);
  s.amplitudes[0] = 1.0;
  return s;
}

DensityMatrix ground_density(int n) { return DensityMatrix::from_pure(ground_state(n)); }

CMat embed_unitary(const CMat& u, const std::vector<int>& targets, int n_qubits) {
  check_targets(targets, n_qubits);
  const int k = static_cast<int>(targets.size());
  if (u.rows() != (1 << k) || u.cols() != (1 << k))
    throw std::invalid_argument("unitary dimension does not match target count");
  const std::size_t dim = std::size_t{1} << n_qubits;

  std::size_t target_mask = 0;
  for (int t : targets) target_mask |= std::size_t{1} << bit_shift(t, n_qubits);

  auto compose = [&](std::size_t base, int local) {
    std::size_t idx = base;
    for (int i = 0; i < k; ++i)
      if ((local >> (k - 1 - i)) & 1) idx |= std::size_t{1} << bit_shift(targets[i], n_qubits);
    return idx;
  };

  CMat out = CMat::Zero(dim, dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (int a = 0; a < (1 << k); ++a)
      for (int b = 0; b < (1 << k); ++b) out(compose(base, a), compose(base, b)) = u(a, b);
  }
  return out;
}

void apply_unitary(StateVector& state, const Unitary& u, const std::vector<int>& targets) {
  check_targets(targets, state.n_qubits);
  const int k = static_cast<int>(targets.size());
  if (u.dim() != (std::size_t{1} << k))
    throw std::invalid_argument("unitary dimension does not match target count");
  const int n = state.n_qubits;
  const std::size_t dim = state.dim();

  std::size_t target_mask = 0;
  std::vector<int> shifts(k);
  for (int i = 0; i < k; ++i) {
    shifts[i] = bit_shift(targets[i], n);
    target_mask |= std::size_t{1} << shifts[i];
  }

  const int local_dim = 1 << k;
  std::vector<std::size_t> idx(local_dim);
  CVec scratch(local_dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (int a = 0; a < local_dim; ++a) {
      std::size_t full = base;
      for (int i = 0; i < k; ++i)
        if ((a >> (k - 1 - i)) & 1) full |= std::size_t{1} << shifts[i];
      idx[a] = full;
      scratch[a] = state.amplitudes[full];
    }
    for (int a = 0; a < local_dim; ++a) {
      Complex acc = 0.0;
      for (int b = 0; b < local_dim; ++b) acc += u.elements(a, b) * scratch[b];
      state.amplitudes[idx[a]] = acc;
    }
  }
}

void apply_unitary(DensityMatrix& state, const Unitary& u, const std::vector<int>& targets) {
  CMat full = embed_unitary(u.elements, targets, state.n_qubits);
  state.elements = full * state.elements * full.adjoint();
}

void apply_kraus_1q(DensityMatrix& rho, const std::vector<Eigen::Matrix2cd>& kraus, int qubit) {
  CMat out = CMat::Zero(rho.dim(), rho.dim());
  for (const auto& op : kraus) {
    CMat full = embed_unitary(op, {qubit}, rho.n_qubits);
    out += full * rho.elements * full.adjoint();
  }
  rho.elements = std::move(out);
}

double expectation(const StateVector& state, const PauliString& p) {
  if (p.n_qubits() != state.n_qubits)
    throw std::invalid_argument("pauli string length does not match state");
  PauliAction act(p);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    Complex a = state.amplitudes[i];
    if (a == Complex{0.0, 0.0}) continue;
    acc += std::conj(state.amplitudes[i ^ act.flip_mask]) * act.phase(i) * a;
  }
  return acc.real();
}

double expectation(const DensityMatrix& state, const PauliString& p) {
  if (p.n_qubits() != state.n_qubits)
    throw std::invalid_argument("pauli string length does not match state");
  PauliAction act(p);
  Complex acc = 0.0;
  for (std::size_t j = 0; j < state.dim(); ++j)
    acc += state.elements(j, j ^ act.flip_mask) * act.phase(j);
  return acc.real();
}

double prob_one(const StateVector& state, int qubit) {
  const std::size_t bit = std::size_t{1} << bit_shift(qubit, state.n_qubits);
  double p = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i)
    if (i & bit) p += std::norm(state.amplitudes[i]);
  return p;
}

double prob_one(const DensityMatrix& state, int qubit) {
  const std::size_t bit = std::size_t{1} << bit_shift(qubit, state.n_qubits);
  double p = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i)
    if (i & bit) p += state.elements(i, i).real();
  return p;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  check_targets(keep, rho.n_qubits);
  const int n = rho.n_qubits;
  const int k = static_cast<int>(keep.size());

  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);

  auto compose = [&](int local, const std::vector<int>& qs, std::size_t base) {
    std::size_t idx = base;
    const int m = static_cast<int>(qs.size());
    for (int i = 0; i < m; ++i)
      if ((local >> (m - 1 - i)) & 1) idx |= std::size_t{1} << bit_shift(qs[i], n);
    return idx;
  };

  DensityMatrix out;
  out.n_qubits = k;
  out.elements = CMat::Zero(1 << k, 1 << k);
  for (int a = 0; a < (1 << k); ++a)
    for (int b = 0; b < (1 << k); ++b) {
      Complex acc = 0.0;
      for (int r = 0; r < (1 << static_cast<int>(rest.size())); ++r) {
        std::size_t ra = compose(a, keep, 0) | compose(r, rest, 0);
        std::size_t rb = compose(b, keep, 0) | compose(r, rest, 0);
        acc += rho.elements(ra, rb);
      }
      out.elements(a, b) = acc;
    }
  return out;
}

Unitary matrix_exponential(const CMat& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix_exponential needs a square matrix");
  if (!is_hermitian(h)) throw std::invalid_argument("matrix_exponential needs a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  CVec phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    phases[i] = std::exp(Complex(0.0, -es.eigenvalues()[i] * t));
  Unitary u;
  u.elements = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return u;
}

namespace {

// PSD square root with eigenvalue clipping at 0.
CMat sqrt_psd(const CMat& m, double psd_tol) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m);
  if (es.eigenvalues().minCoeff() < -psd_tol)
    throw std::invalid_argument("matrix is not positive semidefinite");
  CVec roots(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    roots[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i]));
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity dimension mismatch");
  CMat s = sqrt_psd(rho.elements, 1e-9);
  CMat inner = sqrt_psd(s * sigma.elements * s, 1e-7);
  double f = inner.trace().real();
  f = f * f;
  return std::clamp(f, 0.0, 1.0);
}

double overlap_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity dimension mismatch");
  return std::clamp((rho.elements * sigma.elements).trace().real(), 0.0, 1.0);
}

bool is_hermitian(const CMat& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const CMat& m, double tol) {
  CMat id = CMat::Identity(m.rows(), m.cols());
  return (m * m.adjoint() - id).cwiseAbs().maxCoeff() <= tol;
}

void validate_state(const StateVector& s) {
  if (s.dim() != (std::size_t{1} << s.n_qubits))
    throw std::invalid_argument("state vector length is not 2^n");
  if (std::abs(s.amplitudes.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("state vector is not normalized");
}

void validate_state(const DensityMatrix& r) {
  if (r.dim() != (std::size_t{1} << r.n_qubits))
    throw std::invalid_argument("density matrix dimension is not 2^n");
  if (!is_hermitian(r.elements, 1e-10))
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(r.elements.trace().real() - 1.0) > 1e-10)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMat> es(r.elements);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

}  // namespace qgan
