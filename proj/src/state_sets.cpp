// Copyright 2026 The Uncertainty Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ulab/state_sets.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "ulab/correlations.hpp"
#include "ulab/moments.hpp"
#include "ulab/sampling.hpp"

namespace ulab {

void require_noncommuting(const Observable& a, const Observable& b, const Tolerances& tol) {
    const double norm = commutator(a, b).norm();
    if (norm <= tol.tol_zero) {
        std::ostringstream os;
        os << "observables commute: ||[A,B]|| = " << norm << " <= tol_zero = " << tol.tol_zero;
        throw CommutingPair(os.str());
    }
}

ClassificationResult classify(const Observable& a, const Observable& b, const StateVector& phi,
                              const Tolerances& tol) {
    tol.validate();
    require_dim(a.dim(), b.dim(), "classify");
    require_dim(a.dim(), phi.dim(), "classify");
    require_noncommuting(a, b, tol);

    ClassificationResult r;
    r.tolerances_used = tol;
    const double da = std_dev(a, phi);
    const double db = std_dev(b, phi);
    r.eigen_a = da <= tol.eps_spread;
    r.eigen_b = db <= tol.eps_spread;
    const bool spread = !r.eigen_a && !r.eigen_b;

    r.c = correlation(a, b, phi);
    r.comm_expectation = std::abs(phi.amps().dot(commutator(a, b) * phi.amps()));
    r.comm_forms_agree =
        std::abs(r.comm_expectation - 2.0 * std::abs(r.c.imag())) <= tol.tol_zero;

    r.in_s_ab = spread && std::abs(r.c) <= tol.tol_zero;
    r.in_s_comm = spread && r.comm_expectation <= tol.tol_zero;
    r.in_s_anti = spread && std::abs(r.c.real()) <= tol.tol_zero;
    if (spread) {
        r.pearson = pearson(a, b, phi, tol);
    }
    return r;
}

void membership_scan(const Observable& a, const Observable& b, const ScanConfig& cfg,
                     const Tolerances& tol, const std::function<void(const ScanRow&)>& sink) {
    tol.validate();
    require_dim(a.dim(), b.dim(), "membership_scan");
    require_noncommuting(a, b, tol);
    if (cfg.samples == 0) {
        return;
    }

    const Index d = a.dim();
    auto make_row = [&](std::uint64_t i) {
        Rng rng = substream(cfg.seed, i);
        StateVector phi = haar_random_state(d, rng);
        ClassificationResult res = classify(a, b, phi, tol);
        return ScanRow{i, std::move(phi), std::move(res)};
    };

    const unsigned workers = std::max(1u, cfg.workers);
    if (workers == 1) {
        for (std::uint64_t i = 0; i < cfg.samples; ++i) {
            sink(make_row(i));
        }
        return;
    }

    // Fixed-size blocks keep memory bounded; each block is split across workers
    // and flushed in index order.
    constexpr std::uint64_t kBlock = 8192;
    std::vector<std::optional<ScanRow>> block;
    for (std::uint64_t start = 0; start < cfg.samples; start += kBlock) {
        const std::uint64_t count = std::min(kBlock, cfg.samples - start);
        block.assign(count, std::nullopt);
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::uint64_t k = w; k < count; k += workers) {
                            block[k] = make_row(start + k);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
        for (const auto& row : block) {
            sink(*row);
        }
    }
}

std::vector<ScanRow> membership_scan(const Observable& a, const Observable& b,
                                     const ScanConfig& cfg, const Tolerances& tol) {
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(cfg.samples, 1u << 20)));
    membership_scan(a, b, cfg, tol, [&](const ScanRow& r) { rows.push_back(r); });
    return rows;
}

}  // namespace ulab
