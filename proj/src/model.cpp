#include "srptlab/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace srpt {

Instance::Instance(std::vector<Job> jobs, int machines)
	: jobs_(std::move(jobs)), machines_(machines)
{
	if (machines_ < 1)
		throw InputError("instance needs at least one machine");
	if (jobs_.empty())
		throw InputError("instance has no jobs");
	std::sort(jobs_.begin(), jobs_.end(),
	          [](const Job& a, const Job& b) { return a.id < b.id; });
	for (std::size_t i = 0; i < jobs_.size(); ++i) {
		const Job& j = jobs_[i];
		if (j.id != static_cast<JobId>(i + 1)) {
			std::ostringstream msg;
			msg << "job ids must be unique and contiguous from 1 (expected " << i + 1
			    << ", found " << j.id << ")";
			throw InputError(msg.str());
		}
		if (j.arrival < 0)
			throw InputError("job " + std::to_string(j.id) + " has negative arrival");
		if (j.processing < 1)
			throw InputError("job " + std::to_string(j.id) + " has processing time < 1");
	}
}

Time Instance::total_work() const
{
	Time sum = 0;
	for (const auto& j : jobs_)
		sum += j.processing;
	return sum;
}

Time Instance::max_processing() const
{
	return std::max_element(jobs_.begin(), jobs_.end(),
	                        [](const Job& a, const Job& b) { return a.processing < b.processing; })
		->processing;
}

Time Instance::min_processing() const
{
	return std::min_element(jobs_.begin(), jobs_.end(),
	                        [](const Job& a, const Job& b) { return a.processing < b.processing; })
		->processing;
}

bool Instance::paper_constrained() const
{
	return static_cast<Time>(jobs_.size()) >= machines_ && min_processing() >= machines_;
}

Instance with_zero_releases(const Instance& inst)
{
	std::vector<Job> jobs = inst.jobs();
	for (auto& j : jobs)
		j.arrival = 0;
	return Instance(std::move(jobs), inst.machines());
}

namespace {

Time max_end(const std::vector<Segment>& segs)
{
	Time m = 0;
	for (const auto& s : segs)
		m = std::max(m, s.end);
	return m;
}

} // namespace

Schedule::Schedule(Instance instance, std::vector<Segment> segments)
	: instance_(std::move(instance)), segments_(std::move(segments)), makespan_(max_end(segments_))
{
}

Schedule::Schedule(Instance instance, std::vector<Segment> segments, Time makespan)
	: instance_(std::move(instance)), segments_(std::move(segments)), makespan_(makespan)
{
}

std::vector<Time> Schedule::completion_times() const
{
	std::vector<Time> done(instance_.size(), 0);
	for (const auto& s : segments_)
		if (s.job >= 1 && static_cast<std::size_t>(s.job) <= done.size())
			done[static_cast<std::size_t>(s.job - 1)] = std::max(done[static_cast<std::size_t>(s.job - 1)], s.end);
	return done;
}

namespace {

// Reports every pairwise overlap among segments grouped under one key.
void overlaps(std::vector<Segment> group, const std::string& what, int key,
              std::vector<std::string>& out)
{
	std::sort(group.begin(), group.end(),
	          [](const Segment& a, const Segment& b) { return a.start < b.start; });
	for (std::size_t i = 0; i < group.size(); ++i) {
		for (std::size_t k = i + 1; k < group.size() && group[k].start < group[i].end; ++k) {
			std::ostringstream msg;
			msg << what << ' ' << key << " overlap on [" << group[k].start << ','
			    << std::min(group[i].end, group[k].end) << ')';
			out.push_back(msg.str());
		}
	}
}

} // namespace

std::vector<std::string> validate_schedule(const Schedule& s)
{
	std::vector<std::string> out;
	const Instance& inst = s.instance();
	const auto n = static_cast<JobId>(inst.size());

	std::map<int, std::vector<Segment>> by_machine;
	std::map<int, std::vector<Segment>> by_job;
	std::vector<Time> received(inst.size(), 0);
	Time latest = 0;

	for (const auto& seg : s.segments()) {
		std::ostringstream where;
		where << "segment (J" << seg.job << ",P" << seg.machine << ',' << seg.start << ','
		      << seg.end << ')';
		if (seg.job < 1 || seg.job > n) {
			out.push_back(where.str() + " references unknown job");
			continue;
		}
		if (seg.machine < 1 || seg.machine > inst.machines()) {
			out.push_back(where.str() + " uses machine outside 1.." +
			              std::to_string(inst.machines()));
		}
		if (seg.start >= seg.end) {
			out.push_back(where.str() + " is empty or reversed");
			continue;
		}
		if (seg.start < inst.job(seg.job).arrival) {
			out.push_back(where.str() + " starts before job " + std::to_string(seg.job) +
			              " arrives at " + std::to_string(inst.job(seg.job).arrival));
		}
		received[static_cast<std::size_t>(seg.job - 1)] += seg.length();
		latest = std::max(latest, seg.end);
		by_machine[seg.machine].push_back(seg);
		by_job[seg.job].push_back(seg);
	}

	for (const auto& j : inst.jobs()) {
		Time got = received[static_cast<std::size_t>(j.id - 1)];
		if (got != j.processing) {
			out.push_back("job " + std::to_string(j.id) + " received " + std::to_string(got) +
			              " of " + std::to_string(j.processing) + " units");
		}
	}
	for (auto& [m, segs] : by_machine)
		overlaps(std::move(segs), "machine", m, out);
	for (auto& [j, segs] : by_job)
		overlaps(std::move(segs), "job", j, out);

	if (s.makespan() != latest) {
		out.push_back("makespan " + std::to_string(s.makespan()) +
		              " differs from last segment end " + std::to_string(latest));
	}
	return out;
}

std::vector<Segment> coalesce_segments(std::vector<Segment> segments)
{
	std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
		return std::tie(a.machine, a.start, a.job) < std::tie(b.machine, b.start, b.job);
	});
	std::vector<Segment> out;
	for (const auto& s : segments) {
		if (!out.empty() && out.back().machine == s.machine && out.back().job == s.job &&
		    out.back().end == s.start) {
			out.back().end = s.end;
		} else {
			out.push_back(s);
		}
	}
	return out;
}

} // namespace srpt
