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

#include "qra/tensor.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qra/errors.h"
#include "qra/kernels.h"

using namespace qra;

// ---------------------------------------------------------------- ComplexVector

ComplexVector::ComplexVector(size_t dim) : amps_(dim, cplx{0}) {
    if (dim == 0) {
        throw DimensionError("vector dimension must be positive");
    }
}

ComplexVector::ComplexVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw DimensionError("vector dimension must be positive");
    }
}

ComplexVector ComplexVector::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index " + std::to_string(index) + " out of range for dim " + std::to_string(dim));
    }
    ComplexVector v(dim);
    v[index] = 1;
    return v;
}

double ComplexVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

bool ComplexVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1) <= tol;
}

ComplexVector ComplexVector::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw InvalidValueError("cannot normalize the zero vector");
    }
    return *this * cplx{1 / n};
}

cplx ComplexVector::inner(const ComplexVector &other) const {
    if (dim() != other.dim()) {
        throw DimensionError("inner product of vectors with different dims");
    }
    cplx total = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        total += std::conj(amps_[k]) * other.amps_[k];
    }
    return total;
}

ComplexVector ComplexVector::operator*(cplx factor) const {
    ComplexVector out = *this;
    for (auto &a : out.amps_) {
        a *= factor;
    }
    return out;
}

ComplexVector ComplexVector::operator+(const ComplexVector &other) const {
    if (dim() != other.dim()) {
        throw DimensionError("sum of vectors with different dims");
    }
    ComplexVector out = *this;
    for (size_t k = 0; k < amps_.size(); k++) {
        out.amps_[k] += other.amps_[k];
    }
    return out;
}

ComplexVector qra::kron(const ComplexVector &a, const ComplexVector &b) {
    std::vector<cplx> out;
    out.reserve(a.dim() * b.dim());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return ComplexVector(std::move(out));
}

double qra::max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("comparing vectors with different dims");
    }
    double m = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

// -------------------------------------------------------------- ComplexOperator

ComplexOperator::ComplexOperator(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0}) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("operator dimensions must be positive");
    }
}

ComplexOperator::ComplexOperator(size_t rows, size_t cols, std::vector<cplx> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("operator dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw DimensionError(
            "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries_.size()));
    }
}

ComplexOperator ComplexOperator::identity(size_t dim) {
    std::vector<size_t> images(dim);
    for (size_t k = 0; k < dim; k++) {
        images[k] = k;
    }
    return permutation(std::move(images));
}

ComplexOperator ComplexOperator::permutation(std::vector<size_t> images) {
    size_t n = images.size();
    std::vector<bool> hit(n, false);
    for (size_t img : images) {
        if (img >= n || hit[img]) {
            throw InvalidValueError("index map is not a bijection");
        }
        hit[img] = true;
    }
    ComplexOperator out(n, n);
    for (size_t c = 0; c < n; c++) {
        out.entries_[images[c] * n + c] = 1;
    }
    out.perm_ = std::move(images);
    return out;
}

ComplexOperator ComplexOperator::diagonal(std::span<const cplx> entries) {
    ComplexOperator out(entries.size(), entries.size());
    for (size_t k = 0; k < entries.size(); k++) {
        out.entries_[k * entries.size() + k] = entries[k];
    }
    return out;
}

cplx &ComplexOperator::at(size_t r, size_t c) {
    perm_.reset();
    return entries_[r * cols_ + c];
}

ComplexOperator ComplexOperator::adjoint() const {
    if (perm_.has_value()) {
        std::vector<size_t> inv(perm_->size());
        for (size_t k = 0; k < inv.size(); k++) {
            inv[(*perm_)[k]] = k;
        }
        return permutation(std::move(inv));
    }
    ComplexOperator out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.entries_[c * rows_ + r] = std::conj(entries_[r * cols_ + c]);
        }
    }
    return out;
}

ComplexOperator ComplexOperator::operator*(const ComplexOperator &other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("operator product with mismatched inner dimension");
    }
    if (perm_.has_value() && other.perm_.has_value()) {
        std::vector<size_t> images(other.perm_->size());
        for (size_t k = 0; k < images.size(); k++) {
            images[k] = (*perm_)[(*other.perm_)[k]];
        }
        return permutation(std::move(images));
    }
    ComplexOperator out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            cplx a = entries_[r * cols_ + k];
            if (a == cplx{0}) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                out.entries_[r * other.cols_ + c] += a * other.entries_[k * other.cols_ + c];
            }
        }
    }
    return out;
}

ComplexVector ComplexOperator::operator*(const ComplexVector &v) const {
    if (cols_ != v.dim()) {
        throw DimensionError("operator/vector dimension mismatch");
    }
    ComplexVector out(rows_);
    if (perm_.has_value()) {
        for (size_t c = 0; c < cols_; c++) {
            out[(*perm_)[c]] = v[c];
        }
        return out;
    }
    for (size_t r = 0; r < rows_; r++) {
        cplx acc = 0;
        for (size_t c = 0; c < cols_; c++) {
            acc += entries_[r * cols_ + c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexOperator ComplexOperator::operator-(const ComplexOperator &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("operator difference with mismatched shapes");
    }
    ComplexOperator out(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] = entries_[k] - other.entries_[k];
    }
    return out;
}

bool ComplexOperator::operator==(const ComplexOperator &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

ComplexOperator qra::kron(const ComplexOperator &a, const ComplexOperator &b) {
    if (a.permutation_map().has_value() && b.permutation_map().has_value()) {
        const auto &pa = *a.permutation_map();
        const auto &pb = *b.permutation_map();
        std::vector<size_t> images(pa.size() * pb.size());
        for (size_t i = 0; i < pa.size(); i++) {
            for (size_t j = 0; j < pb.size(); j++) {
                images[i * pb.size() + j] = pa[i] * pb.size() + pb[j];
            }
        }
        return ComplexOperator::permutation(std::move(images));
    }
    size_t rows = a.rows() * b.rows();
    size_t cols = a.cols() * b.cols();
    std::vector<cplx> entries(rows * cols);
    for (size_t ra = 0; ra < a.rows(); ra++) {
        for (size_t ca = 0; ca < a.cols(); ca++) {
            cplx x = a(ra, ca);
            for (size_t rb = 0; rb < b.rows(); rb++) {
                for (size_t cb = 0; cb < b.cols(); cb++) {
                    entries[(ra * b.rows() + rb) * cols + ca * b.cols() + cb] = x * b(rb, cb);
                }
            }
        }
    }
    return ComplexOperator(rows, cols, std::move(entries));
}

double qra::max_abs_diff(const ComplexOperator &a, const ComplexOperator &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("comparing operators with different shapes");
    }
    double m = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

bool qra::is_unitary(const ComplexOperator &u, double tol) {
    if (!u.is_square()) {
        throw DimensionError("is_unitary needs a square operator");
    }
    size_t n = u.rows();
    // Dense product on purpose, so permutation operators are checked on their entries too.
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            cplx acc = 0;
            for (size_t k = 0; k < n; k++) {
                acc += std::conj(u(k, r)) * u(k, c);
            }
            if (r == c) {
                acc -= 1;
            }
            if (std::abs(acc) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool qra::is_projector(const ComplexOperator &p, double tol) {
    if (!p.is_square()) {
        return false;
    }
    ComplexOperator sq = p * p;
    return max_abs_diff(sq, p) <= tol && max_abs_diff(p.adjoint(), p) <= tol;
}

ComplexOperator qra::projector_onto(std::span<const size_t> basis_indices, size_t dim) {
    std::vector<cplx> diag(dim, cplx{0});
    for (size_t k : basis_indices) {
        if (k >= dim) {
            throw DimensionError("projector index " + std::to_string(k) + " out of range for dim " + std::to_string(dim));
        }
        diag[k] = 1;
    }
    return ComplexOperator::diagonal(diag);
}

// ------------------------------------------------------------------- SlotLayout

SlotLayout::SlotLayout(std::vector<size_t> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
    size_t stride = 1;
    for (size_t k = dims_.size(); k-- > 0;) {
        if (dims_[k] == 0) {
            throw DimensionError("slot dimensions must be positive");
        }
        strides_[k] = stride;
        stride *= dims_[k];
    }
    total_ = stride;
}

SlotLayout SlotLayout::with_slot_inserted(size_t position, size_t dim) const {
    if (position > dims_.size()) {
        throw DimensionError("slot insertion position out of range");
    }
    std::vector<size_t> dims = dims_;
    dims.insert(dims.begin() + static_cast<std::ptrdiff_t>(position), dim);
    return SlotLayout(std::move(dims));
}

// ------------------------------------------------------------------ apply_local

namespace {

kernels::LocalIndexing checked_indexing(
    const ComplexOperator &u, const ComplexVector &state, const SlotLayout &layout, std::span<const size_t> slots) {
    if (layout.total_dim() != state.dim()) {
        throw DimensionError(
            "layout dimension " + std::to_string(layout.total_dim()) + " does not match state dimension " +
            std::to_string(state.dim()));
    }
    auto ix = kernels::index_slots(layout, slots);
    if (!u.is_square() || u.rows() != ix.local.size()) {
        throw DimensionError(
            "operator of shape " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
            " does not act on selected slots of total dimension " + std::to_string(ix.local.size()));
    }
    return ix;
}

}  // namespace

ComplexVector qra::apply_local(
    const ComplexOperator &u, const ComplexVector &state, const SlotLayout &layout, std::span<const size_t> slots) {
    auto ix = checked_indexing(u, state, layout, slots);
    ComplexVector out(state.dim());
    if (u.is_permutation()) {
        kernels::parallel::apply_permutation(*u.permutation_map(), ix, state.amplitudes(), out.amplitudes());
    } else {
        kernels::parallel::apply_dense(u.entries(), ix, state.amplitudes(), out.amplitudes());
    }
    return out;
}

ComplexVector qra::apply_local_serial(
    const ComplexOperator &u, const ComplexVector &state, const SlotLayout &layout, std::span<const size_t> slots) {
    auto ix = checked_indexing(u, state, layout, slots);
    ComplexVector out(state.dim());
    if (u.is_permutation()) {
        kernels::serial::apply_permutation(*u.permutation_map(), ix, state.amplitudes(), out.amplitudes());
    } else {
        kernels::serial::apply_dense(u.entries(), ix, state.amplitudes(), out.amplitudes());
    }
    return out;
}

// ------------------------------------------------------------- DensityOperator

DensityOperator::DensityOperator(ComplexOperator matrix) : m_(std::move(matrix)) {
    if (!m_.is_square()) {
        throw DimensionError("density operator must be square");
    }
}

DensityOperator DensityOperator::pure(const ComplexVector &v) {
    size_t n = v.dim();
    std::vector<cplx> entries(n * n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            entries[r * n + c] = v[r] * std::conj(v[c]);
        }
    }
    return DensityOperator(ComplexOperator(n, n, std::move(entries)));
}

DensityOperator DensityOperator::checked(ComplexOperator matrix) {
    DensityOperator rho(std::move(matrix));
    auto problems = rho.violations();
    if (!problems.empty()) {
        std::string msg = "invalid density operator:";
        for (const auto &p : problems) {
            msg += " " + p + ";";
        }
        throw InvalidValueError(msg);
    }
    return rho;
}

cplx DensityOperator::trace() const {
    cplx t = 0;
    for (size_t k = 0; k < dim(); k++) {
        t += m_(k, k);
    }
    return t;
}

double DensityOperator::purity() const {
    // Tr(rho^2) = sum_{rc} rho_rc rho_cr.
    cplx acc = 0;
    for (size_t r = 0; r < dim(); r++) {
        for (size_t c = 0; c < dim(); c++) {
            acc += m_(r, c) * m_(c, r);
        }
    }
    return acc.real();
}

std::vector<double> DensityOperator::eigenvalues() const {
    size_t n = dim();
    Eigen::MatrixXcd m(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            m(r, c) = m_(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<std::string> DensityOperator::violations(double tol, double eigen_tol) const {
    std::vector<std::string> out;
    double herm = max_abs_diff(m_, m_.adjoint());
    if (herm > tol) {
        std::ostringstream ss;
        ss << "not Hermitian (max deviation " << herm << ")";
        out.push_back(ss.str());
    }
    cplx t = trace();
    if (std::abs(t - cplx{1}) > tol) {
        std::ostringstream ss;
        ss << "trace " << t.real() << (t.imag() >= 0 ? "+" : "") << t.imag() << "i is not 1";
        out.push_back(ss.str());
    }
    if (herm <= tol) {
        auto ev = eigenvalues();
        double lowest = *std::min_element(ev.begin(), ev.end());
        if (lowest < -eigen_tol) {
            std::ostringstream ss;
            ss << "negative eigenvalue " << lowest;
            out.push_back(ss.str());
        }
    }
    return out;
}

DensityOperator qra::partial_trace(const DensityOperator &rho, const SlotLayout &layout, std::span<const size_t> keep) {
    if (layout.total_dim() != rho.dim()) {
        throw DimensionError(
            "layout dimension " + std::to_string(layout.total_dim()) + " does not match density operator dimension " +
            std::to_string(rho.dim()));
    }
    std::vector<size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    auto ix = kernels::index_slots(layout, sorted);
    size_t k = ix.local.size();
    std::vector<cplx> out(k * k);
    kernels::parallel::reduce_mixed(rho.matrix().entries(), rho.dim(), ix, out);
    return DensityOperator(ComplexOperator(k, k, std::move(out)));
}

DensityOperator qra::reduced_state(const ComplexVector &psi, const SlotLayout &layout, std::span<const size_t> keep) {
    if (layout.total_dim() != psi.dim()) {
        throw DimensionError(
            "layout dimension " + std::to_string(layout.total_dim()) + " does not match state dimension " +
            std::to_string(psi.dim()));
    }
    std::vector<size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    auto ix = kernels::index_slots(layout, sorted);
    size_t k = ix.local.size();
    std::vector<cplx> out(k * k);
    kernels::parallel::reduce_pure(psi.amplitudes(), ix, out);
    return DensityOperator(ComplexOperator(k, k, std::move(out)));
}

// ---------------------------------------------------------------------- random

static std::vector<cplx> gaussian_entries(size_t count, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> out(count);
    for (auto &z : out) {
        double re = normal(rng);
        double im = normal(rng);
        z = {re, im};
    }
    return out;
}

ComplexOperator qra::random_unitary(size_t dim, std::mt19937_64 &rng) {
    // Modified Gram-Schmidt on the columns, run twice for numerical orthogonality.
    auto m = gaussian_entries(dim * dim, rng);
    auto col = [&](size_t c, size_t r) -> cplx & {
        return m[r * dim + c];
    };
    for (int pass = 0; pass < 2; pass++) {
        for (size_t c = 0; c < dim; c++) {
            for (size_t prev = 0; prev < c; prev++) {
                cplx proj = 0;
                for (size_t r = 0; r < dim; r++) {
                    proj += std::conj(col(prev, r)) * col(c, r);
                }
                for (size_t r = 0; r < dim; r++) {
                    col(c, r) -= proj * col(prev, r);
                }
            }
            double norm = 0;
            for (size_t r = 0; r < dim; r++) {
                norm += std::norm(col(c, r));
            }
            norm = std::sqrt(norm);
            for (size_t r = 0; r < dim; r++) {
                col(c, r) /= norm;
            }
        }
    }
    return ComplexOperator(dim, dim, std::move(m));
}

ComplexVector qra::random_state(size_t dim, std::mt19937_64 &rng) {
    return ComplexVector(gaussian_entries(dim, rng)).normalized();
}

DensityOperator qra::random_density(size_t dim, std::mt19937_64 &rng) {
    ComplexOperator g(dim, dim, gaussian_entries(dim * dim, rng));
    ComplexOperator m = g * g.adjoint();
    cplx t = 0;
    for (size_t k = 0; k < dim; k++) {
        t += m(k, k);
    }
    std::vector<cplx> entries(m.entries().begin(), m.entries().end());
    for (auto &e : entries) {
        e /= t.real();
    }
    // Force exact Hermiticity after rounding.
    for (size_t r = 0; r < dim; r++) {
        entries[r * dim + r] = entries[r * dim + r].real();
        for (size_t c = r + 1; c < dim; c++) {
            entries[c * dim + r] = std::conj(entries[r * dim + c]);
        }
    }
    return DensityOperator(ComplexOperator(dim, dim, std::move(entries)));
}
