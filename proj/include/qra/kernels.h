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

// Low-level amplitude kernels behind the tensor-core API.
//
// Every kernel exists twice: `serial::` is the straightforward reference used
// by tests, `parallel::` splits the outer loop across OpenMP threads. For the
// gather/scatter kernels both produce bit-identical output. The reductions
// sum in a different order, so they agree only up to rounding.

#ifndef QRA_KERNELS_H
#define QRA_KERNELS_H

#include <cstddef>
#include <span>
#include <vector>

#include "qra/tensor.h"

namespace qra::kernels {

/// Offsets splitting a global index into (selected slots, remaining slots).
///
/// global index = local[l] + outer[o], where l enumerates the selected slots
/// (first listed slot most significant) and o enumerates the remaining slots in
/// layout order.
struct LocalIndexing {
    std::vector<size_t> local;
    std::vector<size_t> outer;
};

/// Throws DimensionError on repeated or out-of-range slots.
LocalIndexing index_slots(const SlotLayout &layout, std::span<const size_t> slots);

/// True when the parallel kernels were compiled with OpenMP.
bool parallel_enabled();
/// Number of threads the parallel kernels will use (1 without OpenMP).
int max_threads();

namespace serial {

/// out = (I (x) u) in, with u row-major of dimension local.size().
void apply_dense(std::span<const cplx> u, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out);
/// out[local[images[l]] + o] = in[local[l] + o].
void apply_permutation(
    std::span<const size_t> images, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out);
/// out (k x k, k = local.size()) = Tr_rest |psi><psi|.
void reduce_pure(std::span<const cplx> psi, const LocalIndexing &ix, std::span<cplx> out);
/// out (k x k) = Tr_rest rho, rho row-major of dimension `dim`.
void reduce_mixed(std::span<const cplx> rho, size_t dim, const LocalIndexing &ix, std::span<cplx> out);
/// Inserts a new slot of dimension `new_dim` in state `fill` between an outer
/// block of size in.size()/inner and an inner block of size `inner`.
void insert_slot(std::span<const cplx> in, size_t inner, size_t new_dim, size_t fill, std::span<cplx> out);

}  // namespace serial

namespace parallel {

void apply_dense(std::span<const cplx> u, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out);
void apply_permutation(
    std::span<const size_t> images, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out);
void reduce_pure(std::span<const cplx> psi, const LocalIndexing &ix, std::span<cplx> out);
void reduce_mixed(std::span<const cplx> rho, size_t dim, const LocalIndexing &ix, std::span<cplx> out);
void insert_slot(std::span<const cplx> in, size_t inner, size_t new_dim, size_t fill, std::span<cplx> out);

}  // namespace parallel

}  // namespace qra::kernels

#endif
