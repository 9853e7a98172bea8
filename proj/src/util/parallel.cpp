#include "commlab/util/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace commlab {

namespace {
std::atomic<std::size_t> g_threads{1};
}

std::size_t thread_count()
{
    return g_threads.load();
}

void set_thread_count(std::size_t n)
{
    g_threads.store(std::max<std::size_t>(1, n));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body)
{
    const std::size_t workers = std::min(thread_count(), count);
    if (workers <= 1) {
        if (count > 0) {
            body(0, count);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace commlab
