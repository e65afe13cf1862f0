#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace srpt {

using Time = std::int64_t;
using JobId = std::int32_t;
using MachineId = std::int32_t;

/// Raised for inputs that violate a documented precondition.
class InputError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

struct Job {
	JobId id = 0;
	Time arrival = 0;
	Time processing = 1;

	friend bool operator==(const Job&, const Job&) = default;
};

/// A job sequence together with the number of identical machines.
///
/// Jobs are kept ordered by id; ids must be exactly 1..n. The constructor
/// rejects anything else with InputError.
class Instance {
public:
	Instance(std::vector<Job> jobs, int machines);

	const std::vector<Job>& jobs() const { return jobs_; }
	int machines() const { return machines_; }
	std::size_t size() const { return jobs_.size(); }

	const Job& job(JobId id) const { return jobs_.at(static_cast<std::size_t>(id - 1)); }

	Time total_work() const;
	Time max_processing() const;
	Time min_processing() const;

	// n >= m and every processing time >= m, the operating constraints the
	// SRPT analysis assumes. Not enforced here.
	bool paper_constrained() const;

	friend bool operator==(const Instance&, const Instance&) = default;

private:
	std::vector<Job> jobs_;
	int machines_;
};

/// Half-open execution interval [start, end) of one job on one machine.
struct Segment {
	JobId job = 0;
	MachineId machine = 0;
	Time start = 0;
	Time end = 0;

	Time length() const { return end - start; }

	friend bool operator==(const Segment&, const Segment&) = default;
	friend auto operator<=>(const Segment&, const Segment&) = default;
};

class Schedule {
public:
	// makespan is derived as the largest segment end
	Schedule(Instance instance, std::vector<Segment> segments);
	// explicit makespan, e.g. when loaded from a file; validate_schedule checks it
	Schedule(Instance instance, std::vector<Segment> segments, Time makespan);

	const Instance& instance() const { return instance_; }
	const std::vector<Segment>& segments() const { return segments_; }
	Time makespan() const { return makespan_; }

	// completion time of each job, indexed by id-1; 0 for a job with no segments
	std::vector<Time> completion_times() const;

private:
	Instance instance_;
	std::vector<Segment> segments_;
	Time makespan_;
};

// Copy of the instance with every arrival moved to 0.
Instance with_zero_releases(const Instance& inst);

// One human-readable entry per broken invariant; empty means valid.
std::vector<std::string> validate_schedule(const Schedule& s);

// Joins adjacent segments of the same job on the same machine and sorts the
// result by (machine, start).
std::vector<Segment> coalesce_segments(std::vector<Segment> segments);

} // namespace srpt
