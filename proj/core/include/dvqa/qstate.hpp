#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dvqa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Qubit 0 is the most significant bit of the computational-basis index.
/// All embeddings and partial traces in the library follow this convention.

struct PureState {
  int n_qubits = 0;
  Vector amplitudes;

  static PureState zero_state(int n_qubits);
  double norm() const { return amplitudes.norm(); }
};

struct DensityMatrix {
  int n_qubits = 0;
  Matrix data;

  static DensityMatrix zero_state(int n_qubits);
  static DensityMatrix maximally_mixed(int n_qubits);
  static DensityMatrix from_pure(const PureState& psi);

  Eigen::Index dim() const { return data.rows(); }
  double trace_real() const { return data.trace().real(); }
  double purity() const { return (data * data).trace().real(); }

  /// Full invariant check: Hermitian to 1e-10, unit trace to 1e-10,
  /// eigenvalues >= -1e-9. Costs an eigendecomposition.
  bool is_valid(double herm_tol = 1e-10, double trace_tol = 1e-10,
                double psd_floor = -1e-9) const;
};

/// (a (x) b)[(i*db+k), (j*db+l)] = a[i,j] * b[k,l]
Matrix kron(const Matrix& a, const Matrix& b);

/// Traces out qubit i, returning the (n-1)-qubit reduced state.
DensityMatrix partial_trace_qubit(const DensityMatrix& rho, int i);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-9, 0) are clipped to zero; anything lower throws.
Matrix psd_sqrt(const Matrix& a);

/// F(rho, sigma) = [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2, clamped to [0, 1].
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Sum of absolute eigenvalues of rho - sigma (no 1/2 prefactor).
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

namespace detail {

/// In-place rho <- (U (x) I) rho for a k-qubit gate u (k in {1,2}) embedded
/// on the given targets; targets[0] is the more significant factor of u.
void apply_matrix_left(Matrix& rho, const Matrix& u, const int* targets,
                       int k, int n_qubits);

/// In-place rho <- rho (U (x) I)^dagger.
void apply_matrix_right_dagger(Matrix& rho, const Matrix& u, const int* targets,
                               int k, int n_qubits);

/// Embeds a k-qubit operator on targets into the full 2^n space.
Matrix embed(const Matrix& op, const int* targets, int k, int n_qubits);

/// Inserts a single-qubit state |phi><phi| at qubit slot i of an
/// (n-1)-qubit state sigma, producing an n-qubit state.
Matrix insert_qubit(const Matrix& sigma, const Eigen::Vector2cd& phi, int i,
                    int n_qubits_out);

/// <phi| W |phi> on qubit i: partial matrix element, (n-1)-qubit result.
Matrix project_qubit(const Matrix& w, const Eigen::Vector2cd& phi, int i,
                     int n_qubits_in);

/// Lifts an (n-1)-qubit operator to n qubits with identity on slot i.
Matrix lift_identity(const Matrix& t, int i, int n_qubits_out);

}  // namespace detail

}  // namespace dvqa
