// Copyright 2026 The qra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRA_TENSOR_H
#define QRA_TENSOR_H

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qra {

using cplx = std::complex<double>;

/// Tolerance for algebraic identities (norms, unitarity, projector equations).
inline constexpr double ALGEBRAIC_TOL = 1e-12;
/// Tolerance for spectral and factorization checks.
inline constexpr double SPECTRAL_TOL = 1e-10;

/// A dense vector of complex amplitudes.
class ComplexVector {
   public:
    ComplexVector() = default;
    /// The zero vector of the given dimension.
    explicit ComplexVector(size_t dim);
    explicit ComplexVector(std::vector<cplx> amplitudes);

    /// The computational basis vector |index>.
    static ComplexVector basis(size_t dim, size_t index);

    size_t dim() const {
        return amps_.size();
    }
    const cplx &operator[](size_t k) const {
        return amps_[k];
    }
    cplx &operator[](size_t k) {
        return amps_[k];
    }
    std::span<const cplx> amplitudes() const {
        return amps_;
    }
    std::span<cplx> amplitudes() {
        return amps_;
    }

    double norm_squared() const;
    bool is_normalized(double tol = ALGEBRAIC_TOL) const;
    ComplexVector normalized() const;
    /// <this|other>, conjugate-linear in `this`.
    cplx inner(const ComplexVector &other) const;

    ComplexVector operator*(cplx factor) const;
    ComplexVector operator+(const ComplexVector &other) const;
    bool operator==(const ComplexVector &other) const = default;

   private:
    std::vector<cplx> amps_;
};

ComplexVector kron(const ComplexVector &a, const ComplexVector &b);
double max_abs_diff(const ComplexVector &a, const ComplexVector &b);

/// A dense row-major complex matrix.
///
/// Operators built with `permutation` also remember the index map they were
/// built from. Kernels use it to move amplitudes instead of multiplying, which
/// keeps probabilities of permutation machines exact.
class ComplexOperator {
   public:
    ComplexOperator() = default;
    /// The zero operator.
    ComplexOperator(size_t rows, size_t cols);
    ComplexOperator(size_t rows, size_t cols, std::vector<cplx> row_major);

    static ComplexOperator identity(size_t dim);
    /// The operator sending |i> to |images[i]>. Throws InvalidValueError if `images` is not a bijection.
    static ComplexOperator permutation(std::vector<size_t> images);
    static ComplexOperator diagonal(std::span<const cplx> entries);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    const cplx &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    /// Writing through this accessor drops the permutation map.
    cplx &at(size_t r, size_t c);
    std::span<const cplx> entries() const {
        return entries_;
    }

    const std::optional<std::vector<size_t>> &permutation_map() const {
        return perm_;
    }
    bool is_permutation() const {
        return perm_.has_value();
    }

    ComplexOperator adjoint() const;
    ComplexOperator operator*(const ComplexOperator &other) const;
    ComplexVector operator*(const ComplexVector &v) const;
    ComplexOperator operator-(const ComplexOperator &other) const;
    bool operator==(const ComplexOperator &other) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> entries_;
    std::optional<std::vector<size_t>> perm_;
};

/// Tensor product; slot order equals argument order (a is the more significant factor).
ComplexOperator kron(const ComplexOperator &a, const ComplexOperator &b);
double max_abs_diff(const ComplexOperator &a, const ComplexOperator &b);

/// True iff max |(U^dagger U - I)_{rc}| <= tol. Throws DimensionError for non-square input.
bool is_unitary(const ComplexOperator &u, double tol = ALGEBRAIC_TOL);
/// True iff P*P = P and P^dagger = P within tol.
bool is_projector(const ComplexOperator &p, double tol = ALGEBRAIC_TOL);
/// Diagonal 0/1 operator selecting the coordinate subspace spanned by `basis_indices`.
ComplexOperator projector_onto(std::span<const size_t> basis_indices, size_t dim);

/// Factorization of a global space into an ordered list of slots.
///
/// Slot 0 is the most significant digit of a global index, so a global index
/// is sum_k digit_k * stride(k) with stride(last) = 1.
class SlotLayout {
   public:
    SlotLayout() = default;
    explicit SlotLayout(std::vector<size_t> dims);

    size_t num_slots() const {
        return dims_.size();
    }
    size_t dim(size_t slot) const {
        return dims_[slot];
    }
    std::span<const size_t> dims() const {
        return dims_;
    }
    size_t total_dim() const {
        return total_;
    }
    size_t stride(size_t slot) const {
        return strides_[slot];
    }
    size_t digit(size_t index, size_t slot) const {
        return (index / strides_[slot]) % dims_[slot];
    }
    SlotLayout with_slot_inserted(size_t position, size_t dim) const;
    bool operator==(const SlotLayout &other) const {
        return dims_ == other.dims_;
    }

   private:
    std::vector<size_t> dims_;
    std::vector<size_t> strides_;
    size_t total_ = 1;
};

/// Applies `u` to the listed slots of `state` and the identity everywhere else.
///
/// The first listed slot is the most significant factor of u's domain. The
/// global matrix is never formed.
ComplexVector apply_local(
    const ComplexOperator &u, const ComplexVector &state, const SlotLayout &layout, std::span<const size_t> slots);

/// Same as apply_local but always runs the serial reference kernel.
ComplexVector apply_local_serial(
    const ComplexOperator &u, const ComplexVector &state, const SlotLayout &layout, std::span<const size_t> slots);

/// A density operator: Hermitian, unit trace, positive semidefinite.
///
/// The constructor only checks squareness; call `violations` (or `checked`) to
/// validate the remaining invariants.
class DensityOperator {
   public:
    DensityOperator() = default;
    explicit DensityOperator(ComplexOperator matrix);

    static DensityOperator pure(const ComplexVector &v);
    /// Throws InvalidValueError listing every violated invariant.
    static DensityOperator checked(ComplexOperator matrix);

    size_t dim() const {
        return m_.rows();
    }
    const ComplexOperator &matrix() const {
        return m_;
    }
    const cplx &operator()(size_t r, size_t c) const {
        return m_(r, c);
    }

    cplx trace() const;
    /// Tr(rho^2).
    double purity() const;
    std::vector<double> eigenvalues() const;
    std::vector<std::string> violations(double tol = ALGEBRAIC_TOL, double eigen_tol = SPECTRAL_TOL) const;
    bool is_valid(double tol = ALGEBRAIC_TOL, double eigen_tol = SPECTRAL_TOL) const {
        return violations(tol, eigen_tol).empty();
    }

   private:
    ComplexOperator m_;
};

/// Reduced density operator on the `keep` slots (output in ascending slot order).
DensityOperator partial_trace(const DensityOperator &rho, const SlotLayout &layout, std::span<const size_t> keep);
/// Reduced density operator of the pure state |psi><psi| without forming the global matrix.
DensityOperator reduced_state(const ComplexVector &psi, const SlotLayout &layout, std::span<const size_t> keep);

/// Orthonormalized matrix of independent standard complex Gaussians.
ComplexOperator random_unitary(size_t dim, std::mt19937_64 &rng);
/// Normalized vector of independent standard complex Gaussians.
ComplexVector random_state(size_t dim, std::mt19937_64 &rng);
/// G G^dagger / Tr(G G^dagger) for a complex Gaussian G. Full rank almost surely.
DensityOperator random_density(size_t dim, std::mt19937_64 &rng);

}  // namespace qra

#endif
