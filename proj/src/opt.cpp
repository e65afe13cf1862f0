#include "srptlab/opt.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>

namespace srpt {

std::string_view to_string(OptMethod m)
{
	switch (m) {
	case OptMethod::paper_opt:
		return "paper-opt";
	case OptMethod::mcnaughton:
		return "mcnaughton";
	case OptMethod::brute_force_zero_release:
		return "brute-force-zero-release";
	case OptMethod::brute_force_with_releases:
		return "brute-force-with-releases";
	}
	return "?";
}

bool SearchCeiling::admits(const Instance& inst) const
{
	return static_cast<int>(inst.size()) <= max_jobs && inst.machines() <= max_machines &&
	       inst.total_work() <= max_total_work;
}

std::string SearchCeiling::describe() const
{
	return "n <= " + std::to_string(max_jobs) + ", m <= " + std::to_string(max_machines) +
	       ", total work <= " + std::to_string(max_total_work);
}

OptResult paper_opt(const Instance& inst)
{
	const Time t = inst.jobs().front().processing;
	for (const auto& j : inst.jobs()) {
		if (j.processing != t)
			throw UnsupportedInstance(
				"paper-opt is only defined for equal processing times; use mcnaughton or brute");
	}
	const int m = inst.machines();
	std::vector<Segment> segs;
	for (const auto& j : inst.jobs()) {
		const auto round = static_cast<Time>((j.id - 1) / m);
		segs.push_back({j.id, static_cast<MachineId>((j.id - 1) % m + 1), round * t, (round + 1) * t});
	}
	const auto n = static_cast<Time>(inst.size());
	const Time makespan = (n + m - 1) / m * t;
	return {makespan, OptMethod::paper_opt,
	        Schedule(with_zero_releases(inst), coalesce_segments(std::move(segs)), makespan)};
}

OptResult mcnaughton(const Instance& inst)
{
	const Time m = inst.machines();
	const Time bound = std::max(inst.max_processing(), (inst.total_work() + m - 1) / m);
	return {bound, OptMethod::mcnaughton, std::nullopt};
}

namespace {

class Search {
public:
	Search(const Instance& inst, bool respect_releases)
		: machines_(inst.machines())
	{
		for (const auto& j : inst.jobs()) {
			release_.push_back(respect_releases ? j.arrival : 0);
			work_.push_back(j.processing);
		}
	}

	Time solve() { return best(0, work_); }

	std::vector<Segment> witness()
	{
		std::vector<Segment> segs;
		std::vector<Time> rem = work_;
		std::vector<std::size_t> prev_machine(rem.size(), 0);
		Time t = 0;
		const Time target = best(0, rem);
		while (!finished(rem)) {
			auto ready = ready_at(t, rem);
			if (ready.empty()) {
				t = next_release(t, rem);
				continue;
			}
			bool stepped = false;
			for_each_choice(ready, [&](const std::vector<std::size_t>& pick) {
				if (stepped)
					return;
				auto after = rem;
				for (auto i : pick)
					--after[i];
				if (best(t + 1, after) != target)
					return;
				place(pick, t, prev_machine, segs);
				rem = std::move(after);
				stepped = true;
			});
			++t;
		}
		return coalesce_segments(std::move(segs));
	}

private:
	bool finished(const std::vector<Time>& rem) const
	{
		return std::all_of(rem.begin(), rem.end(), [](Time r) { return r == 0; });
	}

	std::vector<std::size_t> ready_at(Time t, const std::vector<Time>& rem) const
	{
		std::vector<std::size_t> out;
		for (std::size_t i = 0; i < rem.size(); ++i)
			if (release_[i] <= t && rem[i] > 0)
				out.push_back(i);
		return out;
	}

	Time next_release(Time t, const std::vector<Time>& rem) const
	{
		Time next = std::numeric_limits<Time>::max();
		for (std::size_t i = 0; i < rem.size(); ++i)
			if (rem[i] > 0 && release_[i] > t)
				next = std::min(next, release_[i]);
		return next;
	}

	// Every non-empty subset of the ready jobs with at most m members.
	template <class F>
	void for_each_choice(const std::vector<std::size_t>& ready, F&& visit) const
	{
		const std::size_t r = ready.size();
		std::vector<std::size_t> pick;
		for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
			if (std::popcount(mask) > machines_)
				continue;
			pick.clear();
			for (std::size_t b = 0; b < r; ++b)
				if (mask & (1u << b))
					pick.push_back(ready[b]);
			visit(pick);
		}
	}

	// Released jobs with equal remaining work are interchangeable, and
	// unreleased jobs are fully determined by t.
	std::string key(Time t, const std::vector<Time>& rem) const
	{
		std::vector<Time> released;
		for (std::size_t i = 0; i < rem.size(); ++i)
			if (release_[i] <= t && rem[i] > 0)
				released.push_back(rem[i]);
		std::sort(released.begin(), released.end());
		std::string k = std::to_string(t) + ":";
		for (auto r : released)
			k.push_back(static_cast<char>(r));
		return k;
	}

	Time best(Time t, const std::vector<Time>& rem)
	{
		if (finished(rem))
			return t;
		auto k = key(t, rem);
		if (auto it = memo_.find(k); it != memo_.end())
			return it->second;

		Time result = std::numeric_limits<Time>::max();
		auto ready = ready_at(t, rem);
		if (ready.empty()) {
			result = best(next_release(t, rem), rem);
		} else {
			for_each_choice(ready, [&](const std::vector<std::size_t>& pick) {
				auto after = rem;
				for (auto i : pick)
					--after[i];
				result = std::min(result, best(t + 1, after));
			});
		}
		memo_.emplace(std::move(k), result);
		return result;
	}

	void place(const std::vector<std::size_t>& pick, Time t, std::vector<std::size_t>& prev_machine,
	           std::vector<Segment>& segs) const
	{
		std::vector<bool> busy(static_cast<std::size_t>(machines_) + 1, false);
		std::vector<std::size_t> unplaced;
		for (auto i : pick) {
			auto pm = prev_machine[i];
			if (pm != 0 && !busy[pm]) {
				busy[pm] = true;
			} else {
				unplaced.push_back(i);
			}
		}
		for (auto i : unplaced) {
			std::size_t mi = 1;
			while (busy[mi])
				++mi;
			busy[mi] = true;
			prev_machine[i] = mi;
		}
		for (auto i : pick)
			segs.push_back({static_cast<JobId>(i + 1), static_cast<MachineId>(prev_machine[i]), t, t + 1});
	}

	int machines_;
	std::vector<Time> release_;
	std::vector<Time> work_;
	std::unordered_map<std::string, Time> memo_;
};

} // namespace

OptResult brute_force_opt(const Instance& inst, bool respect_releases, const SearchCeiling& ceiling)
{
	if (!ceiling.admits(inst))
		throw UnsupportedInstance("instance exceeds brute-force ceiling (" + ceiling.describe() + ")");

	Search search(inst, respect_releases);
	const Time makespan = search.solve();
	auto segs = search.witness();
	const auto method =
		respect_releases ? OptMethod::brute_force_with_releases : OptMethod::brute_force_zero_release;

	if (respect_releases)
		return {makespan, method, Schedule(inst, std::move(segs), makespan)};

	// the witness ignores arrivals, so it belongs to the zero-release instance
	return {makespan, method, Schedule(with_zero_releases(inst), std::move(segs), makespan)};
}

} // namespace srpt
