#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srptlab/model.hpp"

namespace srpt {

enum class GanttStyle { ascii, svg };

GanttStyle gantt_style_from_string(std::string_view s);

/// Raised when asked to draw a schedule that fails validation.
class InvalidSchedule : public InputError {
public:
	explicit InvalidSchedule(std::vector<std::string> violations);

	const std::vector<std::string>& violations() const { return violations_; }

private:
	std::vector<std::string> violations_;
};

// Timing diagram with one row per machine (P1 at the top) and one cell per
// time unit from 0 to the makespan. ASCII draws each unit as the job label
// or '.' when idle; SVG uses a fixed 40px-per-unit scale.
std::string render_gantt(const Schedule& s, GanttStyle style);

} // namespace srpt
