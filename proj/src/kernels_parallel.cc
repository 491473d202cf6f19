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

#include <algorithm>
#include <cstdint>

#ifdef QRA_HAVE_OPENMP
#include <omp.h>
#endif

#include "qra/kernels.h"

using namespace qra;
using namespace qra::kernels;

namespace {

// Below this many touched amplitudes the thread fork costs more than the loop.
constexpr size_t MIN_PARALLEL_WORK = size_t{1} << 14;

// Reductions are split into fixed chunks so the summation order does not
// depend on the thread count.
constexpr size_t REDUCE_CHUNK = 2048;

}  // namespace

bool kernels::parallel_enabled() {
#ifdef QRA_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

int kernels::max_threads() {
#ifdef QRA_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel::apply_dense(std::span<const cplx> u, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out) {
    const size_t d = ix.local.size();
    const auto n_outer = static_cast<int64_t>(ix.outer.size());
    const bool big = ix.outer.size() * d >= MIN_PARALLEL_WORK;
#pragma omp parallel if (big)
    {
        std::vector<cplx> buf(d);
#pragma omp for schedule(static)
        for (int64_t o = 0; o < n_outer; o++) {
            size_t base = ix.outer[o];
            for (size_t c = 0; c < d; c++) {
                buf[c] = in[base + ix.local[c]];
            }
            for (size_t r = 0; r < d; r++) {
                cplx acc = 0;
                const cplx *row = u.data() + r * d;
                for (size_t c = 0; c < d; c++) {
                    acc += row[c] * buf[c];
                }
                out[base + ix.local[r]] = acc;
            }
        }
    }
}

void parallel::apply_permutation(
    std::span<const size_t> images, const LocalIndexing &ix, std::span<const cplx> in, std::span<cplx> out) {
    const size_t d = ix.local.size();
    const auto n_outer = static_cast<int64_t>(ix.outer.size());
    const bool big = ix.outer.size() * d >= MIN_PARALLEL_WORK;
#pragma omp parallel for schedule(static) if (big)
    for (int64_t o = 0; o < n_outer; o++) {
        size_t base = ix.outer[o];
        for (size_t c = 0; c < d; c++) {
            out[base + ix.local[images[c]]] = in[base + ix.local[c]];
        }
    }
}

void parallel::reduce_pure(std::span<const cplx> psi, const LocalIndexing &ix, std::span<cplx> out) {
    const size_t k = ix.local.size();
    const size_t n_chunks = (ix.outer.size() + REDUCE_CHUNK - 1) / REDUCE_CHUNK;
    if (n_chunks <= 1 || ix.outer.size() * k < MIN_PARALLEL_WORK) {
        serial::reduce_pure(psi, ix, out);
        return;
    }
    std::vector<cplx> partial(n_chunks * k * k, cplx{0});
#pragma omp parallel for schedule(dynamic)
    for (int64_t chunk = 0; chunk < static_cast<int64_t>(n_chunks); chunk++) {
        cplx *acc = partial.data() + chunk * k * k;
        size_t lo = chunk * REDUCE_CHUNK;
        size_t hi = std::min(ix.outer.size(), lo + REDUCE_CHUNK);
        for (size_t o = lo; o < hi; o++) {
            size_t base = ix.outer[o];
            for (size_t a = 0; a < k; a++) {
                cplx va = psi[base + ix.local[a]];
                if (va == cplx{0}) {
                    continue;
                }
                for (size_t b = 0; b < k; b++) {
                    acc[a * k + b] += va * std::conj(psi[base + ix.local[b]]);
                }
            }
        }
    }
    std::fill(out.begin(), out.end(), cplx{0});
    for (size_t chunk = 0; chunk < n_chunks; chunk++) {
        for (size_t e = 0; e < k * k; e++) {
            out[e] += partial[chunk * k * k + e];
        }
    }
}

void parallel::reduce_mixed(std::span<const cplx> rho, size_t dim, const LocalIndexing &ix, std::span<cplx> out) {
    const size_t k = ix.local.size();
    const auto kk = static_cast<int64_t>(k * k);
    const bool big = ix.outer.size() * k * k >= MIN_PARALLEL_WORK;
    // Each output entry is owned by one iteration; the inner sum runs in serial order.
#pragma omp parallel for schedule(static) if (big)
    for (int64_t e = 0; e < kk; e++) {
        size_t a = e / k;
        size_t b = e % k;
        cplx acc = 0;
        for (size_t base : ix.outer) {
            acc += rho[(base + ix.local[a]) * dim + base + ix.local[b]];
        }
        out[e] = acc;
    }
}

void parallel::insert_slot(std::span<const cplx> in, size_t inner, size_t new_dim, size_t fill, std::span<cplx> out) {
    const auto blocks = static_cast<int64_t>(in.size() / inner);
    const bool big = out.size() >= MIN_PARALLEL_WORK;
#pragma omp parallel for schedule(static) if (big)
    for (int64_t hi = 0; hi < blocks; hi++) {
        cplx *dst = out.data() + hi * new_dim * inner;
        std::fill(dst, dst + new_dim * inner, cplx{0});
        const cplx *src = in.data() + hi * inner;
        std::copy(src, src + inner, dst + fill * inner);
    }
}
