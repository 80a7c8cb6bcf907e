#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lhopf {

enum class Execution { Serial, Parallel };

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Evaluates check(state, k) for every k in [0, count) and returns the
// witnesses it produced, sorted. make_state() builds the per-worker
// scratch (caches are not thread-safe, so each worker owns one). The
// serial path runs the identical loop body on a single state and is the
// reference the parallel path is tested against.
template <class MakeState, class Check>
std::vector<std::string> sweep(std::size_t count, Execution exec, MakeState make_state, Check check) {
    std::vector<std::string> witnesses;
    if (exec == Execution::Serial) {
        auto state = make_state();
        for (std::size_t k = 0; k < count; ++k)
            if (std::optional<std::string> w = check(state, k))
                witnesses.push_back(std::move(*w));
    } else {
        std::exception_ptr failure;
#pragma omp parallel
        {
            std::vector<std::string> local;
            auto state = make_state();
            const auto n = static_cast<long long>(count);
#pragma omp for schedule(dynamic, 1) nowait
            for (long long k = 0; k < n; ++k) {
                try {
                    if (std::optional<std::string> w = check(state, static_cast<std::size_t>(k)))
                        local.push_back(std::move(*w));
                } catch (...) {
#pragma omp critical(lhopf_sweep_error)
                    if (!failure)
                        failure = std::current_exception();
                }
            }
#pragma omp critical(lhopf_sweep_merge)
            witnesses.insert(witnesses.end(), std::make_move_iterator(local.begin()),
                             std::make_move_iterator(local.end()));
        }
        if (failure)
            std::rethrow_exception(failure);
    }
    std::sort(witnesses.begin(), witnesses.end());
    return witnesses;
}

// Maps f(state, k) over [0, count) into a vector, preserving index order.
template <class Result, class MakeState, class Fn>
std::vector<Result> parallel_map(std::size_t count, Execution exec, MakeState make_state, Fn f) {
    std::vector<Result> out(count);
    if (exec == Execution::Serial) {
        auto state = make_state();
        for (std::size_t k = 0; k < count; ++k)
            out[k] = f(state, k);
        return out;
    }
    std::exception_ptr failure;
#pragma omp parallel
    {
        auto state = make_state();
        const auto n = static_cast<long long>(count);
#pragma omp for schedule(dynamic, 1) nowait
        for (long long k = 0; k < n; ++k) {
            try {
                out[static_cast<std::size_t>(k)] = f(state, static_cast<std::size_t>(k));
            } catch (...) {
#pragma omp critical(lhopf_map_error)
                if (!failure)
                    failure = std::current_exception();
            }
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace lhopf
