#ifndef EXTRI_PARALLEL_HPP
#define EXTRI_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace extri {

/// Number of workers to use when the caller asks for 0 ("auto").
inline unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/**
 * Runs fn(i) for every i in [0, count), handing indices out dynamically to
 * up to `workers` threads. fn must only touch state owned by index i. The
 * exception from the lowest failing index is rethrown after all threads join.
 */
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned workers, Fn&& fn)
{
    workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_index = count;

    auto body = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(body);
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace extri

#endif // EXTRI_PARALLEL_HPP
