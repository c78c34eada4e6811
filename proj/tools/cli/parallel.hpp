#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace exocalc::cli {

/// Worker count: EXOCALC_THREADS when set to a positive integer, else the hardware count.
inline unsigned sweep_threads()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EXOCALC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

/// out[i] = f(i) for i < count. Results are stored by index, so the order never depends
/// on scheduling. The first exception (lowest index) is rethrown after all workers stop.
template <class R, class F> std::vector<R> parallel_map(std::size_t count, F f)
{
    std::vector<R> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(sweep_threads(), std::max<std::size_t>(count, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace exocalc::cli
