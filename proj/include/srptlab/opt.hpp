#pragma once

#include <optional>
#include <string_view>

#include "srptlab/model.hpp"

namespace srpt {

enum class OptMethod { paper_opt, mcnaughton, brute_force_zero_release, brute_force_with_releases };

std::string_view to_string(OptMethod m);

struct OptResult {
	Time makespan = 0;
	OptMethod method = OptMethod::mcnaughton;
	std::optional<Schedule> schedule;
};

/// The instance lies outside what a given oracle supports (unequal jobs for
/// paper_opt, too large for brute force).
class UnsupportedInstance : public InputError {
public:
	using InputError::InputError;
};

struct SearchCeiling {
	int max_jobs = 6;
	int max_machines = 4;
	Time max_total_work = 30;

	bool admits(const Instance& inst) const;
	std::string describe() const;
};

// Offline optimum that ignores arrivals and places equal jobs round by round:
// J_i runs on machine ((i-1) mod m)+1 during round ceil(i/m). The schedule
// refers to the zero-release copy of the instance.
OptResult paper_opt(const Instance& inst);

// max(max_i T_i, ceil(sum_i T_i / m)); arrivals ignored, no schedule.
OptResult mcnaughton(const Instance& inst);

// Exact minimum makespan over all unit-grid preemptive schedules. With
// respect_releases off every arrival is treated as 0. Refuses instances
// beyond the ceiling.
OptResult brute_force_opt(const Instance& inst, bool respect_releases,
                          const SearchCeiling& ceiling = {});

} // namespace srpt
