#include "cy4/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cy4 {

namespace {

std::atomic<int> override_threads{0};

int env_threads() {
    int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* s = std::getenv("CY4_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && v > 0) return static_cast<int>(std::min<long>(v, 1024));
    }
    return hw;
}

}  // namespace

int thread_count() {
    int o = override_threads.load();
    return o > 0 ? o : env_threads();
}

void set_thread_count(int n) { override_threads.store(n > 0 ? n : 0); }

void parallel_for(size_t n, const std::function<void(size_t)>& f) {
    const size_t workers = std::min<size_t>(n, static_cast<size_t>(thread_count()));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        for (size_t i; (i = next++) < n;) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace cy4
