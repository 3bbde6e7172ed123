#include "nlgames/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace nlgames {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;  // 1/sqrt(2)

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int sign_to_index(int sign) {
  if (sign != +1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return sign == +1 ? 0 : 1;
}

}  // namespace

StateVector::StateVector(Amplitudes amps, std::string label)
    : amps_(amps), label_(std::move(label)) {
  double sq = 0.0;
  for (const Complex& a : amps_) {
    if (!finite(a)) throw std::invalid_argument("StateVector: non-finite amplitude");
    sq += std::norm(a);
  }
  if (std::abs(sq - 1.0) > 1e-12) {
    throw std::invalid_argument("StateVector: amplitudes are not unit norm");
  }
}

double StateVector::norm() const {
  double sq = 0.0;
  for (const Complex& a : amps_) sq += std::norm(a);
  return std::sqrt(sq);
}

TwoQubitObservable::TwoQubitObservable(Matrix matrix, std::string label)
    : matrix_(matrix), label_(std::move(label)) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex& entry = matrix_[i][j];
      if (!finite(entry)) throw std::invalid_argument("TwoQubitObservable: non-finite entry");
      if (std::abs(entry - std::conj(matrix_[j][i])) > 1e-12) {
        throw std::invalid_argument("TwoQubitObservable: matrix is not Hermitian");
      }
    }
  }
}

TwoQubitObservable TwoQubitObservable::operator+(const TwoQubitObservable& rhs) const {
  Matrix sum{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sum[i][j] = matrix_[i][j] + rhs.matrix_[i][j];
  }
  std::string label;
  if (!label_.empty() && !rhs.label_.empty()) label = label_ + " + " + rhs.label_;
  return TwoQubitObservable(sum, label);
}

StateVector singlet_state() {
  return StateVector({Complex(0), Complex(kInvSqrt2), Complex(-kInvSqrt2), Complex(0)}, "singlet");
}

StateVector phi_plus_state() {
  return StateVector({Complex(kInvSqrt2), Complex(0), Complex(0), Complex(kInvSqrt2)}, "phi_plus");
}

StateVector computational_basis_state(int basis_index) {
  if (basis_index < 0 || basis_index > 3) {
    throw std::invalid_argument("basis_index must be in 0..3");
  }
  Amplitudes amps{};
  amps[static_cast<std::size_t>(basis_index)] = Complex(1);
  static const char* kLabels[4] = {"basis_00", "basis_01", "basis_10", "basis_11"};
  return StateVector(amps, kLabels[basis_index]);
}

TwoQubitObservable pauli_x_observable(Site site) {
  TwoQubitObservable::Matrix m{};
  switch (site) {
    case Site::A:
      // sigma_x (x) I: flips Alice's qubit.
      m[0][2] = m[2][0] = m[1][3] = m[3][1] = Complex(1);
      return TwoQubitObservable(m, "sigma_x_A");
    case Site::B:
      // I (x) sigma_x: flips Bob's qubit.
      m[0][1] = m[1][0] = m[2][3] = m[3][2] = Complex(1);
      return TwoQubitObservable(m, "sigma_x_B");
    case Site::Joint:
      // sigma_x (x) sigma_x: flips both, the antidiagonal.
      m[0][3] = m[3][0] = m[1][2] = m[2][1] = Complex(1);
      return TwoQubitObservable(m, "sigma_x_A (x) sigma_x_B");
  }
  throw std::invalid_argument("unknown observable site");
}

Amplitudes apply(const TwoQubitObservable& obs, const StateVector& state) {
  Amplitudes out{};
  const auto& m = obs.matrix();
  const auto& v = state.amps();
  for (int i = 0; i < 4; ++i) {
    Complex acc(0);
    for (int j = 0; j < 4; ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

Complex overlap(const StateVector& lhs, const StateVector& rhs) {
  Complex acc(0);
  for (int i = 0; i < 4; ++i) acc += std::conj(lhs.amps()[i]) * rhs.amps()[i];
  return acc;
}

double expectation(const TwoQubitObservable& obs, const StateVector& state) {
  Amplitudes applied = apply(obs, state);
  Complex acc(0);
  for (int i = 0; i < 4; ++i) acc += std::conj(state.amps()[i]) * applied[i];
  return acc.real();
}

bool is_eigenstate(const TwoQubitObservable& obs, const StateVector& state, double eigenvalue,
                   double tol) {
  if (!(tol > 0)) throw std::invalid_argument("is_eigenstate: tol must be positive");
  Amplitudes applied = apply(obs, state);
  double sq = 0.0;
  for (int i = 0; i < 4; ++i) sq += std::norm(applied[i] - eigenvalue * state.amps()[i]);
  return std::sqrt(sq) <= tol;
}

StateVector x_product_eigenstate(int sign_a, int sign_b) {
  sign_to_index(sign_a);
  sign_to_index(sign_b);
  const double a = sign_a, b = sign_b;
  // |s_a>|s_b> with |+-> = (|0> +- |1>)/sqrt(2).
  Amplitudes amps{Complex(0.5), Complex(0.5 * b), Complex(0.5 * a), Complex(0.5 * a * b)};
  std::string label = std::string("x_basis_") + (sign_a > 0 ? "p" : "m") + (sign_b > 0 ? "p" : "m");
  return StateVector(amps, std::move(label));
}

MeasurementResult measure_x_pair(const StateVector& state, Rng& rng) {
  if (std::abs(state.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("measure_x_pair: state is not normalized");
  }
  // Born probabilities |<s_a s_b|state>|^2 for the four sign pairs.
  static constexpr int kSigns[4][2] = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
  double probs[4];
  for (int k = 0; k < 4; ++k) {
    const double a = kSigns[k][0], b = kSigns[k][1];
    const Complex proj = 0.5 * (state.amp(0) + b * state.amp(1) + a * state.amp(2) +
                                a * b * state.amp(3));
    probs[k] = std::norm(proj);
  }
  const double u = rng.next_unit();
  double cumulative = 0.0;
  int chosen = -1;
  int last_supported = 0;  // absorbs rounding slack, never a zero-probability bucket
  for (int k = 0; k < 4; ++k) {
    if (probs[k] > 0.0) last_supported = k;
  }
  for (int k = 0; k < 4; ++k) {
    cumulative += probs[k];
    if (u < cumulative) {
      chosen = k;
      break;
    }
  }
  if (chosen < 0) chosen = last_supported;
  OutcomePair outcome{kSigns[chosen][0], kSigns[chosen][1]};
  return MeasurementResult{outcome, x_product_eigenstate(outcome.a, outcome.b)};
}

}  // namespace nlgames
