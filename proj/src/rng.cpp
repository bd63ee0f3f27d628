#include "dlab/rng.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dlab {

std::size_t thread_count() {
    if (const char* env = std::getenv("DLAB_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // fall through to hardware default
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0)
        return;
    std::size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(begin + chunk, n);
        if (begin >= end)
            break;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& t : pool)
        t.join();
}

}  // namespace dlab
