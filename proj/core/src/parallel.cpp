#include "omfib/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace omfib {

namespace {
std::atomic<int> g_threads{0};

int initial_thread_count() {
    if (const char* env = std::getenv("OMFIB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}
}  // namespace

int thread_count() {
    int t = g_threads.load(std::memory_order_relaxed);
    if (t == 0) {
        t = initial_thread_count();
        g_threads.store(t, std::memory_order_relaxed);
    }
    return t;
}

void set_thread_count(int n) { g_threads.store(n >= 1 ? n : 1, std::memory_order_relaxed); }

}  // namespace omfib
