#pragma once

#include <array>
#include <complex>
#include <string>

#include "nlgames/rng.hpp"

namespace nlgames {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 4>;

// Two-qubit pure state. Amplitudes are ordered by the computational basis
// |00>, |01>, |10>, |11>, with the first qubit belonging to Alice.
class StateVector {
 public:
  // Rejects non-finite amplitudes and norms deviating from 1 by more than 1e-12.
  explicit StateVector(Amplitudes amps, std::string label = "");

  const Amplitudes& amps() const { return amps_; }
  const Complex& amp(int basis_index) const { return amps_[static_cast<std::size_t>(basis_index)]; }
  const std::string& label() const { return label_; }

  double norm() const;

 private:
  Amplitudes amps_;
  std::string label_;
};

// Hermitian 4x4 operator on the two-qubit space.
class TwoQubitObservable {
 public:
  using Matrix = std::array<std::array<Complex, 4>, 4>;

  // Rejects matrices that are not Hermitian within 1e-12.
  explicit TwoQubitObservable(Matrix matrix, std::string label = "");

  const Matrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }

  // Sum of Hermitian observables (itself Hermitian).
  TwoQubitObservable operator+(const TwoQubitObservable& rhs) const;

 private:
  Matrix matrix_;
  std::string label_;
};

// A correlated pair of measurement answers, each a +1/-1 eigenvalue.
// `a` is Alice's outcome, `b` is Bob's.
struct OutcomePair {
  int a;
  int b;

  bool operator==(const OutcomePair&) const = default;
};

struct MeasurementResult {
  OutcomePair outcome;
  StateVector post_state;
};

enum class Site { A, B, Joint };

// The Bell state (|01> - |10>)/sqrt(2); its x-axis spin measurements are
// perfectly anti-correlated.
StateVector singlet_state();

// The Bell state (|00> + |11>)/sqrt(2); its x-axis spin measurements are
// perfectly correlated.
StateVector phi_plus_state();

// One of the four computational basis states |00>..|11>.
StateVector computational_basis_state(int basis_index);

// sigma_x on Alice's qubit (A), on Bob's (B), or on both (Joint):
// sigma_x (x) I, I (x) sigma_x, sigma_x (x) sigma_x.
TwoQubitObservable pauli_x_observable(Site site);

// Raw matrix-vector action; no renormalization.
Amplitudes apply(const TwoQubitObservable& obs, const StateVector& state);

// <lhs|rhs>
Complex overlap(const StateVector& lhs, const StateVector& rhs);

// <state|obs|state> (real for Hermitian obs; the real part is returned).
double expectation(const TwoQubitObservable& obs, const StateVector& state);

// True iff ||obs|state> - eigenvalue*|state>|| <= tol. Requires tol > 0.
bool is_eigenstate(const TwoQubitObservable& obs, const StateVector& state, double eigenvalue,
                   double tol);

// Measures both qubits along x, sampling one of the four (+-1, +-1) joint
// outcomes with Born probabilities |<s_a s_b|state>|^2. The post state is the
// corresponding product eigenstate |s_a>|s_b>. Rejects states whose norm
// deviates from 1 by more than 1e-9.
MeasurementResult measure_x_pair(const StateVector& state, Rng& rng);

// The product eigenstate |s_a>|s_b> of the x-basis, s = +1 or -1.
StateVector x_product_eigenstate(int sign_a, int sign_b);

}  // namespace nlgames
