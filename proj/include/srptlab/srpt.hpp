#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "srptlab/model.hpp"

namespace srpt {

/// What happens to running jobs at a decision epoch.
///   reassign_all: at an arrival instant every machine rescans and the
///                 selected jobs are laid onto machines 1..k in
///                 (remaining, id) order, so jobs may migrate. At an epoch
///                 that is only a completion, running jobs are not
///                 interrupted and just the freed machines pick up work.
///   sticky:       a selected job that was already running always keeps
///                 its machine.
/// Both pick the same jobs at every epoch; only machine placement differs.
enum class Migration { reassign_all, sticky };

std::string_view to_string(Migration m);
Migration migration_from_string(std::string_view s);

// Job tie-breaking (lowest id) and machine order (lowest index) are fixed.
struct PolicyConfig {
	Migration migration = Migration::reassign_all;
};

struct Epoch {
	Time time = 0;
	// released, unfinished jobs and their remaining work, ordered by id
	std::vector<std::pair<JobId, Time>> remaining;
	// job per machine (index = machine-1), 0 when idle
	std::vector<JobId> assignment;

	friend bool operator==(const Epoch&, const Epoch&) = default;
};

struct EngineTrace {
	std::vector<Epoch> epochs;

	friend bool operator==(const EngineTrace&, const EngineTrace&) = default;
};

struct SimulationResult {
	Schedule schedule;
	EngineTrace trace;
};

// Event-driven SRPT on identical machines. Decision epochs are exactly the
// arrival and completion instants; at each one the min(m, |ready|) jobs with
// the least remaining work run until the next epoch.
SimulationResult simulate_srpt(const Instance& inst, PolicyConfig cfg = {});

// Remaining work of every released, unfinished job as seen at epoch time t.
// Throws InputError if t is not an epoch of the trace.
std::map<JobId, Time> remaining_profile(const EngineTrace& trace, Time t);

} // namespace srpt
