#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace lucaslab::detail {

/// Worker count: LUCASLAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
inline unsigned worker_count()
{
	if (const char* env = std::getenv("LUCASLAB_THREADS"))
	{
		try
		{
			int n = std::stoi(env);
			if (n > 0)
				return static_cast<unsigned>(n);
		}
		catch (const std::exception&)
		{
		}
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Calls f(i) for i in [0, count) on a pool of worker threads. If any call
 * throws, the exception of the lowest failing index is rethrown after all
 * workers finish, so failures do not depend on scheduling.
 */
template <class F>
void parallel_for(size_t count, F&& f)
{
	std::vector<std::exception_ptr> errors(count);
	std::atomic<size_t> next{0};
	auto work = [&] {
		for (size_t i; (i = next.fetch_add(1)) < count;)
		{
			try
			{
				f(i);
			}
			catch (...)
			{
				errors[i] = std::current_exception();
			}
		}
	};
	size_t workers = std::min<size_t>(worker_count(), count);
	if (workers <= 1)
		work();
	else
	{
		std::vector<std::thread> pool;
		for (size_t w = 0; w < workers; ++w)
			pool.emplace_back(work);
		for (auto& t : pool)
			t.join();
	}
	for (auto& e : errors)
		if (e)
			std::rethrow_exception(e);
}

} // namespace lucaslab::detail
