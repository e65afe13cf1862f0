#include "oracles.hpp"

#include <algorithm>

namespace oracle {

using namespace srpt;

std::vector<Segment> unit_step_srpt(const Instance& inst, Migration policy)
{
	const auto& jobs = inst.jobs();
	const int m = inst.machines();
	std::vector<Time> rem;
	for (const auto& j : jobs)
		rem.push_back(j.processing);
	std::vector<int> machine_of(jobs.size(), 0);

	std::vector<Segment> units;
	for (Time t = 0;; ++t) {
		bool left = false;
		std::vector<int> ready;
		for (std::size_t i = 0; i < jobs.size(); ++i) {
			left = left || rem[i] > 0;
			if (rem[i] > 0 && jobs[i].arrival <= t)
				ready.push_back(static_cast<int>(i));
		}
		if (!left)
			break;
		std::stable_sort(ready.begin(), ready.end(), [&](int a, int b) { return rem[a] < rem[b]; });
		ready.resize(std::min<std::size_t>(ready.size(), static_cast<std::size_t>(m)));

		std::vector<int> next_machine(jobs.size(), 0);
		std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
		bool arrival = false;
		for (const auto& j : jobs)
			arrival = arrival || j.arrival == t;
		if (policy == Migration::sticky || !arrival) {
			for (int i : ready)
				if (machine_of[i] != 0) {
					next_machine[i] = machine_of[i];
					used[machine_of[i]] = true;
				}
		}
		for (int i : ready) {
			if (next_machine[i] != 0)
				continue;
			int k = 1;
			while (used[k])
				++k;
			used[k] = true;
			next_machine[i] = k;
		}
		for (int i : ready) {
			units.push_back({jobs[i].id, next_machine[i], t, t + 1});
			--rem[i];
		}
		for (std::size_t i = 0; i < jobs.size(); ++i)
			machine_of[i] = rem[i] > 0 ? next_machine[i] : 0;
	}

	// merge consecutive units by hand
	std::sort(units.begin(), units.end(), [](const Segment& a, const Segment& b) {
		return a.machine != b.machine ? a.machine < b.machine : a.start < b.start;
	});
	std::vector<Segment> out;
	for (const auto& u : units) {
		if (!out.empty() && out.back().machine == u.machine && out.back().job == u.job && out.back().end == u.start)
			out.back().end = u.end;
		else
			out.push_back(u);
	}
	return out;
}

Time makespan_of(const std::vector<Segment>& segs)
{
	Time m = 0;
	for (const auto& s : segs)
		m = std::max(m, s.end);
	return m;
}

void for_each_zero_release_instance(int max_n, int max_m, int max_p,
                                    const std::function<void(const Instance&)>& visit)
{
	for (int n = 1; n <= max_n; ++n) {
		std::vector<int> p(static_cast<std::size_t>(n), 1);
		while (true) {
			for (int m = 1; m <= max_m; ++m) {
				std::vector<Job> jobs;
				for (int i = 0; i < n; ++i)
					jobs.push_back({i + 1, 0, p[static_cast<std::size_t>(i)]});
				visit(Instance(std::move(jobs), m));
			}
			int k = 0;
			while (k < n && p[static_cast<std::size_t>(k)] == max_p)
				p[static_cast<std::size_t>(k++)] = 1;
			if (k == n)
				break;
			++p[static_cast<std::size_t>(k)];
		}
	}
}

Instance random_instance(std::mt19937& rng, int max_n, int max_m, int max_p, int max_arrival)
{
	std::uniform_int_distribution<int> dn(1, max_n), dm(1, max_m), dp(1, max_p), da(0, max_arrival);
	const int n = dn(rng);
	std::vector<Job> jobs;
	for (int i = 1; i <= n; ++i) {
		const Time a = da(rng);
		jobs.push_back({i, a, dp(rng)});
	}
	return Instance(std::move(jobs), dm(rng));
}

} // namespace oracle
