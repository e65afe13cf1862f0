#include "srptlab/srpt.hpp"

#include <algorithm>
#include <limits>

namespace srpt {

std::string_view to_string(Migration m)
{
	return m == Migration::sticky ? "sticky" : "reassign-all";
}

Migration migration_from_string(std::string_view s)
{
	if (s == "reassign-all")
		return Migration::reassign_all;
	if (s == "sticky")
		return Migration::sticky;
	throw InputError("unknown migration policy '" + std::string(s) +
	                 "' (expected reassign-all or sticky)");
}

SimulationResult simulate_srpt(const Instance& inst, PolicyConfig cfg)
{
	const auto& jobs = inst.jobs();
	const auto n = jobs.size();
	const auto m = static_cast<std::size_t>(inst.machines());

	std::vector<Time> remaining(n);
	for (std::size_t i = 0; i < n; ++i)
		remaining[i] = jobs[i].processing;

	std::vector<Time> arrivals;
	for (const auto& j : jobs)
		arrivals.push_back(j.arrival);
	std::sort(arrivals.begin(), arrivals.end());
	arrivals.erase(std::unique(arrivals.begin(), arrivals.end()), arrivals.end());

	std::vector<Segment> segments;
	EngineTrace trace;
	std::vector<JobId> on_machine(m, 0);
	std::size_t unfinished = n;
	Time now = arrivals.front();

	while (true) {
		std::vector<std::size_t> ready;
		for (std::size_t i = 0; i < n; ++i)
			if (jobs[i].arrival <= now && remaining[i] > 0)
				ready.push_back(i);

		std::sort(ready.begin(), ready.end(), [&](std::size_t a, std::size_t b) {
			return remaining[a] != remaining[b] ? remaining[a] < remaining[b] : a < b;
		});
		const std::size_t k = std::min(m, ready.size());

		// running jobs are only interrupted by an arrival
		const bool arrival_epoch = std::binary_search(arrivals.begin(), arrivals.end(), now);
		std::vector<JobId> next_on_machine(m, 0);
		if (cfg.migration == Migration::reassign_all && arrival_epoch) {
			for (std::size_t slot = 0; slot < k; ++slot)
				next_on_machine[slot] = jobs[ready[slot]].id;
		} else {
			std::vector<bool> placed(k, false);
			for (std::size_t mi = 0; mi < m; ++mi) {
				for (std::size_t slot = 0; slot < k; ++slot) {
					if (on_machine[mi] != 0 && on_machine[mi] == jobs[ready[slot]].id) {
						next_on_machine[mi] = on_machine[mi];
						placed[slot] = true;
					}
				}
			}
			std::size_t mi = 0;
			for (std::size_t slot = 0; slot < k; ++slot) {
				if (placed[slot])
					continue;
				while (next_on_machine[mi] != 0)
					++mi;
				next_on_machine[mi] = jobs[ready[slot]].id;
			}
		}
		on_machine = next_on_machine;

		Epoch ep;
		ep.time = now;
		std::vector<std::size_t> by_id = ready;
		std::sort(by_id.begin(), by_id.end());
		for (auto i : by_id)
			ep.remaining.emplace_back(jobs[i].id, remaining[i]);
		ep.assignment = on_machine;
		trace.epochs.push_back(std::move(ep));

		if (unfinished == 0)
			break;

		Time next = std::numeric_limits<Time>::max();
		auto upcoming = std::upper_bound(arrivals.begin(), arrivals.end(), now);
		if (upcoming != arrivals.end())
			next = *upcoming;
		for (auto id : on_machine)
			if (id != 0)
				next = std::min(next, now + remaining[static_cast<std::size_t>(id - 1)]);

		for (std::size_t mi = 0; mi < m; ++mi) {
			JobId id = on_machine[mi];
			if (id == 0)
				continue;
			segments.push_back({id, static_cast<MachineId>(mi + 1), now, next});
			auto& rem = remaining[static_cast<std::size_t>(id - 1)];
			rem -= next - now;
			if (rem == 0) {
				--unfinished;
				on_machine[mi] = 0;
			}
		}
		now = next;
	}

	return {Schedule(inst, coalesce_segments(std::move(segments))), std::move(trace)};
}

std::map<JobId, Time> remaining_profile(const EngineTrace& trace, Time t)
{
	auto it = std::find_if(trace.epochs.begin(), trace.epochs.end(),
	                       [t](const Epoch& e) { return e.time == t; });
	if (it == trace.epochs.end())
		throw InputError("time " + std::to_string(t) + " is not a decision epoch");
	return {it->remaining.begin(), it->remaining.end()};
}

} // namespace srpt
