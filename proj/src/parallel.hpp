#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bch::detail {

inline int resolve_threads(int requested)
{
	if (requested > 0)
		return requested;
	return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

inline int worker_count(std::size_t count, int threads)
{
	return static_cast<int>(std::max<std::size_t>(
	    1, std::min<std::size_t>(resolve_threads(threads), count)));
}

// Runs task(i, worker) for i in [0, count) on up to `threads` workers,
// worker in [0, workers). Tasks are handed out in index order; the first
// exception is rethrown after all workers have stopped.
template <typename Task>
void parallel_for(std::size_t count, int threads, Task &&task)
{
	int workers = worker_count(count, threads);
	if (workers <= 1) {
		for (std::size_t i = 0; i < count; ++i)
			task(i, 0);
		return;
	}

	std::atomic<std::size_t> next{0};
	std::atomic<bool> failed{false};
	std::exception_ptr error;
	std::mutex error_mutex;
	auto worker = [&](int w) {
		for (;;) {
			std::size_t i = next.fetch_add(1);
			if (i >= count || failed.load())
				return;
			try {
				task(i, w);
			} catch (...) {
				std::lock_guard lock(error_mutex);
				if (!error)
					error = std::current_exception();
				failed.store(true);
			}
		}
	};
	{
		std::vector<std::jthread> pool;
		for (int w = 0; w < workers; ++w)
			pool.emplace_back(worker, w);
	}
	if (error)
		std::rethrow_exception(error);
}

} // namespace bch::detail
