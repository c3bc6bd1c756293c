#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace vpt {

// Applies fn to every item on up to `jobs` threads and hands the results to
// sink in input order, each as soon as it and all earlier ones are done.
// fn must not throw; wrap failures into its result type.
template <class In, class Fn, class Sink>
void ordered_map(const std::vector<In>& items, int jobs, Fn fn, Sink sink)
{
    using result = std::invoke_result_t<Fn&, const In&>;
    std::size_t n = items.size();
    if (jobs <= 1 || n <= 1) {
        for (const In& x : items)
            sink(fn(x));
        return;
    }
    std::vector<std::optional<result>> done(n);
    std::mutex lock;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            result r = fn(items[i]);
            std::lock_guard guard(lock);
            done[i].emplace(std::move(r));
            ready.notify_all();
        }
    };
    std::vector<std::jthread> pool;
    std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);

    for (std::size_t i = 0; i < n; ++i) {
        std::unique_lock guard(lock);
        ready.wait(guard, [&] { return done[i].has_value(); });
        result r = std::move(*done[i]);
        done[i].reset();
        guard.unlock();
        sink(std::move(r));
    }
}

template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, int jobs, Fn fn)
{
    std::vector<std::invoke_result_t<Fn&, const In&>> out;
    out.reserve(items.size());
    ordered_map(items, jobs, fn, [&](auto&& r) { out.push_back(std::move(r)); });
    return out;
}

} // namespace vpt
