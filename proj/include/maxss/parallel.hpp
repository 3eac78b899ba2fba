#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace maxss {

/// Worker cap for the Monte Carlo and bootstrap loops. Zero means
/// "hardware concurrency". Results never depend on the value.
struct Threads {
    unsigned count = 0;

    unsigned resolve(std::size_t tasks) const noexcept
    {
        unsigned n = count != 0 ? count : std::max(1u, std::thread::hardware_concurrency());
        return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
    }
};

/// Runs body(i) for i in [0, tasks). Tasks are statically striped over
/// workers; each task must write only to its own slot.
template <class Body>
void parallel_for(std::size_t tasks, Threads threads, Body&& body)
{
    const unsigned workers = threads.resolve(tasks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) {
            body(i);
        }
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < tasks; i += workers) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace maxss
