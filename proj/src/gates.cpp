#include "qgan/gates.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qgan {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

const std::array<std::pair<GateKind, const char*>, 12> kKindNames = {{
    {GateKind::RX, "RX"},
    {GateKind::RZ, "RZ"},
    {GateKind::H, "H"},
    {GateKind::X_HALF, "X_HALF"},
    {GateKind::X, "X"},
    {GateKind::U_ENT, "U_ENT"},
    {GateKind::U_PHASE, "U_PHASE"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
    {GateKind::CONTROLLED_RX_GEN, "CONTROLLED_RX_GEN"},
    {GateKind::CONTROLLED_RZ_GEN, "CONTROLLED_RZ_GEN"},
    {GateKind::DELAY, "DELAY"},
}};

CMat exchange_hamiltonian(int n_qubits) {
  // sum_{j<k} (s+_j s-_k + s-_j s+_k), lambda factored out
  Eigen::Matrix2cd sp, sm;
  sp << 0, 0, 1, 0;
  sm << 0, 1, 0, 0;
  const std::size_t dim = std::size_t{1} << n_qubits;
  CMat h = CMat::Zero(dim, dim);
  for (int j = 0; j < n_qubits; ++j)
    for (int k = j + 1; k < n_qubits; ++k) {
      h += embed_unitary(sp, {j}, n_qubits) * embed_unitary(sm, {k}, n_qubits);
      h += embed_unitary(sm, {j}, n_qubits) * embed_unitary(sp, {k}, n_qubits);
    }
  return h;
}

}  // namespace

std::string gate_kind_name(GateKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  throw std::invalid_argument("unknown gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  for (const auto& [kind, n] : kKindNames)
    if (name == n) return kind;
  throw std::invalid_argument("unknown gate kind name: " + name);
}

double CouplingSpec::lambda_tau() const {
  // lambda [rad/ns] = 2*pi * (lambda/2pi) [MHz] * 1e-3
  return 2.0 * kPi * lambda_over_2pi_mhz * 1e-3 * tau_ns;
}

CouplingSpec CouplingSpec::quarter_period(double lambda_over_2pi_mhz) {
  if (lambda_over_2pi_mhz == 0.0)
    throw std::invalid_argument("quarter_period needs a nonzero coupling");
  CouplingSpec spec;
  spec.lambda_over_2pi_mhz = lambda_over_2pi_mhz;
  spec.tau_ns = 1000.0 / (8.0 * std::abs(lambda_over_2pi_mhz));
  return spec;
}

double default_duration_ns(GateKind kind, int n_targets) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::H:
    case GateKind::X_HALF:
    case GateKind::X:
      return 30.0;
    case GateKind::RZ:
      return 20.0;
    case GateKind::U_ENT:
      return n_targets == 3 ? 55.0 : 50.0;
    case GateKind::U_PHASE:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CONTROLLED_RX_GEN:
    case GateKind::CONTROLLED_RZ_GEN:
      return 160.0;
    case GateKind::DELAY:
      return 0.0;
  }
  return 0.0;
}

GateOp GateOp::rotation(char axis, int qubit, double theta, int param_index) {
  GateOp op;
  op.kind = axis == 'x' ? GateKind::RX : GateKind::RZ;
  if (axis != 'x' && axis != 'z') throw std::invalid_argument("rotation axis must be x or z");
  op.targets = {qubit};
  op.theta = theta;
  op.duration_ns = default_duration_ns(op.kind, 1);
  op.param_index = param_index;
  return op;
}

GateOp GateOp::ent(const std::vector<int>& qubits, const CouplingSpec& spec) {
  GateOp op;
  op.kind = GateKind::U_ENT;
  op.targets = qubits;
  op.lambda_tau = spec.lambda_tau();
  op.duration_ns = spec.tau_ns > 0 ? spec.tau_ns
                                   : default_duration_ns(op.kind, static_cast<int>(qubits.size()));
  return op;
}

void Circuit::append(GateOp op) {
  if (op.duration_ns == 0.0 && op.kind != GateKind::DELAY)
    op.duration_ns = default_duration_ns(op.kind, static_cast<int>(op.targets.size()));
  for (int t : op.targets)
    if (t < 0 || t >= n_qubits) throw std::invalid_argument("gate target outside circuit register");
  gates.push_back(std::move(op));
}

void Circuit::append(const Circuit& other) {
  for (const auto& g : other.gates) append(g);
}

std::string Circuit::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& g : gates) {
    os << gate_kind_name(g.kind) << ' ';
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
      if (i) os << ',';
      os << g.targets[i];
    }
    switch (g.kind) {
      case GateKind::RX:
      case GateKind::RZ:
        os << " theta=" << g.theta;
        break;
      case GateKind::U_ENT:
        os << " lambda_tau=" << g.lambda_tau;
        break;
      case GateKind::DELAY:
        os << " duration_ns=" << g.duration_ns;
        break;
      default:
        break;
    }
    os << '\n';
  }
  return os.str();
}

Circuit Circuit::from_text(const std::string& text, int n_qubits) {
  Circuit c;
  c.n_qubits = n_qubits;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind_name, targets_str;
    ls >> kind_name >> targets_str;
    GateOp op;
    op.kind = gate_kind_from_name(kind_name);
    std::istringstream ts(targets_str);
    std::string tok;
    while (std::getline(ts, tok, ',')) op.targets.push_back(std::stoi(tok));
    std::string kv;
    while (ls >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad circuit line: " + line);
      std::string key = kv.substr(0, eq);
      double val = std::stod(kv.substr(eq + 1));
      if (key == "theta") op.theta = val;
      else if (key == "lambda_tau") op.lambda_tau = val;
      else if (key == "duration_ns") op.duration_ns = val;
      else throw std::invalid_argument("bad circuit attribute: " + key);
    }
    c.append(std::move(op));
  }
  return c;
}

Unitary rotation_matrix(char axis, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle must be finite");
  Unitary u;
  u.elements = CMat(2, 2);
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  if (axis == 'x') {
    u.elements << c, -kI * s, -kI * s, c;
  } else if (axis == 'z') {
    u.elements << std::exp(-kI * (theta / 2.0)), 0, 0, std::exp(kI * (theta / 2.0));
  } else {
    throw std::invalid_argument("rotation axis must be x or z");
  }
  return u;
}

Unitary hadamard() {
  Unitary u;
  u.elements = CMat(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  u.elements << r, r, r, -r;
  return u;
}

Unitary pauli_x() {
  Unitary u;
  u.elements = CMat(2, 2);
  u.elements << 0, 1, 1, 0;
  return u;
}

Unitary u_ent_lambda_tau(int n_qubits, double lambda_tau) {
  if (n_qubits < 2 || n_qubits > 3)
    throw std::invalid_argument("u_ent supports 2 or 3 qubits");
  return matrix_exponential(exchange_hamiltonian(n_qubits), lambda_tau);
}

Unitary u_ent(const std::vector<int>& qubits, const CouplingSpec& spec) {
  const int k = static_cast<int>(qubits.size());
  if (k < 2 || k > 3) throw std::invalid_argument("u_ent supports 2 or 3 qubits");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (qubits[i] == qubits[j]) throw std::invalid_argument("u_ent qubits must be distinct");
  return u_ent_lambda_tau(k, spec.lambda_tau());
}

Unitary u_ent_hetero(int n_qubits, const std::vector<double>& lambda_tau_per_pair) {
  if (n_qubits < 2 || n_qubits > 3)
    throw std::invalid_argument("u_ent supports 2 or 3 qubits");
  const std::size_t n_pairs = static_cast<std::size_t>(n_qubits * (n_qubits - 1) / 2);
  if (lambda_tau_per_pair.size() != n_pairs)
    throw std::invalid_argument("one lambda*tau per qubit pair required");
  Eigen::Matrix2cd sp, sm;
  sp << 0, 0, 1, 0;
  sm << 0, 1, 0, 0;
  const std::size_t dim = std::size_t{1} << n_qubits;
  CMat h = CMat::Zero(dim, dim);
  std::size_t pair = 0;
  for (int j = 0; j < n_qubits; ++j)
    for (int k = j + 1; k < n_qubits; ++k, ++pair) {
      CMat term = embed_unitary(sp, {j}, n_qubits) * embed_unitary(sm, {k}, n_qubits);
      term += embed_unitary(sm, {j}, n_qubits) * embed_unitary(sp, {k}, n_qubits);
      h += lambda_tau_per_pair[pair] * term;
    }
  return matrix_exponential(h, 1.0);
}

Unitary u_phase() {
  Unitary u;
  u.elements = CMat::Zero(4, 4);
  u.elements(0, 0) = 1.0;
  u.elements(1, 1) = -kI;
  u.elements(2, 2) = -kI;
  u.elements(3, 3) = 1.0;
  return u;
}

Unitary cnot() {
  Unitary u;
  u.elements = CMat::Zero(4, 4);
  u.elements(0, 0) = 1.0;
  u.elements(1, 1) = 1.0;
  u.elements(2, 3) = 1.0;
  u.elements(3, 2) = 1.0;
  return u;
}

Unitary cz() {
  Unitary u;
  u.elements = CMat::Zero(4, 4);
  u.elements(0, 0) = 1.0;
  u.elements(1, 1) = 1.0;
  u.elements(2, 2) = 1.0;
  u.elements(3, 3) = -1.0;
  return u;
}

std::vector<GateOp> composed_cnot_ops(int control, int target) {
  if (control == target) throw std::invalid_argument("control and target must differ");
  std::vector<GateOp> ops;
  ops.push_back(GateOp::rotation('z', target, kPi / 2));
  ops.push_back(GateOp::rotation('x', target, kPi / 2));
  GateOp up;
  up.kind = GateKind::U_PHASE;
  up.targets = {control, target};
  up.duration_ns = default_duration_ns(GateKind::U_PHASE, 2);
  ops.push_back(up);
  ops.push_back(GateOp::rotation('z', target, 3 * kPi / 2));
  ops.push_back(GateOp::rotation('x', target, kPi / 2));
  ops.push_back(GateOp::rotation('z', target, kPi / 2));
  ops.push_back(GateOp::rotation('z', control, kPi / 2));
  return ops;
}

std::vector<GateOp> composed_cz_ops(int control, int target) {
  std::vector<GateOp> ops;
  GateOp h;
  h.kind = GateKind::H;
  h.targets = {target};
  h.duration_ns = default_duration_ns(GateKind::H, 1);
  ops.push_back(h);
  auto inner = composed_cnot_ops(control, target);
  ops.insert(ops.end(), inner.begin(), inner.end());
  ops.push_back(h);
  return ops;
}

namespace {

CMat ops_matrix(const std::vector<GateOp>& ops, int n_qubits) {
  CMat m = CMat::Identity(std::size_t{1} << n_qubits, std::size_t{1} << n_qubits);
  for (const auto& op : ops) m = embed_unitary(gate_unitary(op).elements, op.targets, n_qubits) * m;
  return m;
}

}  // namespace

Unitary composed_cnot() {
  Unitary u;
  u.elements = ops_matrix(composed_cnot_ops(0, 1), 2);
  return u;
}

Unitary composed_cz() {
  Unitary u;
  u.elements = ops_matrix(composed_cz_ops(0, 1), 2);
  return u;
}

Unitary gate_unitary(const GateOp& op) {
  switch (op.kind) {
    case GateKind::RX:
      return rotation_matrix('x', op.theta);
    case GateKind::RZ:
      return rotation_matrix('z', op.theta);
    case GateKind::H:
      return hadamard();
    case GateKind::X_HALF:
      return rotation_matrix('x', kPi / 2);
    case GateKind::X:
      return pauli_x();
    case GateKind::U_ENT:
      return u_ent_lambda_tau(static_cast<int>(op.targets.size()), op.lambda_tau);
    case GateKind::U_PHASE:
      return u_phase();
    case GateKind::CNOT:
    case GateKind::CONTROLLED_RX_GEN:
      return cnot();
    case GateKind::CZ:
    case GateKind::CONTROLLED_RZ_GEN:
      return cz();
    case GateKind::DELAY: {
      Unitary u;
      u.elements = CMat::Identity(2, 2);
      return u;
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

void run_circuit(StateVector& state, const Circuit& c) {
  for (const auto& op : c.gates) {
    if (op.kind == GateKind::DELAY) continue;
    apply_unitary(state, gate_unitary(op), op.targets);
  }
}

void run_circuit(DensityMatrix& state, const Circuit& c) {
  for (const auto& op : c.gates) {
    if (op.kind == GateKind::DELAY) continue;
    apply_unitary(state, gate_unitary(op), op.targets);
  }
}

CMat circuit_matrix(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  CMat m = CMat::Identity(dim, dim);
  for (const auto& op : c.gates) {
    if (op.kind == GateKind::DELAY) continue;
    m = embed_unitary(gate_unitary(op).elements, op.targets, c.n_qubits) * m;
  }
  return m;
}

}  // namespace qgan
