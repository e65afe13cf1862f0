#include "srptlab/gantt.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace srpt {

namespace {

std::string joined(const std::vector<std::string>& v)
{
	std::string out = "schedule is invalid";
	for (const auto& s : v)
		out += "; " + s;
	return out;
}

constexpr int unit_px = 40;
constexpr int row_px = 30;
constexpr int left_px = 48;
constexpr int top_px = 10;

constexpr const char* palette[] = {
	"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
	"#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
};

// job occupying each unit of each machine; 0 = idle
std::vector<std::vector<JobId>> grid(const Schedule& s)
{
	std::vector<std::vector<JobId>> rows(static_cast<std::size_t>(s.instance().machines()),
	                                     std::vector<JobId>(static_cast<std::size_t>(s.makespan()), 0));
	for (const auto& seg : s.segments())
		for (Time t = seg.start; t < seg.end; ++t)
			rows[static_cast<std::size_t>(seg.machine - 1)][static_cast<std::size_t>(t)] = seg.job;
	return rows;
}

std::string ascii(const Schedule& s)
{
	const auto rows = grid(s);
	const std::size_t label_w = std::to_string(rows.size()).size() + 2;
	std::ostringstream os;
	for (std::size_t m = 0; m < rows.size(); ++m) {
		std::string label = "P" + std::to_string(m + 1) + ":";
		label.resize(label_w, ' ');
		os << label << " |";
		for (std::size_t t = 0; t < rows[m].size(); ++t) {
			if (t)
				os << ' ';
			if (rows[m][t] == 0)
				os << '.';
			else
				os << 'J' << rows[m][t];
		}
		os << "|\n";
	}
	std::string axis = "t:";
	axis.resize(label_w, ' ');
	os << axis << "  0.." << s.makespan() << '\n';
	return os.str();
}

std::string svg(const Schedule& s)
{
	const int machines = s.instance().machines();
	const auto span = static_cast<int>(s.makespan());
	const int width = left_px + span * unit_px + 20;
	const int axis_y = top_px + machines * row_px;
	const int height = axis_y + 30;

	std::ostringstream os;
	os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
	   << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
	   << height << "\" font-family=\"monospace\" font-size=\"12\">\n";

	for (int m = 1; m <= machines; ++m) {
		const int y = top_px + (m - 1) * row_px;
		os << "  <text x=\"4\" y=\"" << y + row_px / 2 + 4 << "\">P" << m << "</text>\n";
		os << "  <rect x=\"" << left_px << "\" y=\"" << y << "\" width=\"" << span * unit_px << "\" height=\""
		   << row_px << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
	}

	auto segs = s.segments();
	std::sort(segs.begin(), segs.end());
	for (const auto& seg : segs) {
		const auto x = left_px + seg.start * unit_px;
		const auto w = seg.length() * unit_px;
		const int y = top_px + (seg.machine - 1) * row_px;
		os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << row_px
		   << "\" fill=\"" << palette[static_cast<std::size_t>(seg.job - 1) % std::size(palette)]
		   << "\" stroke=\"#333333\"/>\n";
		os << "  <text x=\"" << x + w / 2 << "\" y=\"" << y + row_px / 2 + 4
		   << "\" text-anchor=\"middle\">J" << seg.job << "</text>\n";
	}

	os << "  <line x1=\"" << left_px << "\" y1=\"" << axis_y << "\" x2=\"" << left_px + span * unit_px
	   << "\" y2=\"" << axis_y << "\" stroke=\"#000000\"/>\n";
	for (int t = 0; t <= span; ++t) {
		const int x = left_px + t * unit_px;
		os << "  <line x1=\"" << x << "\" y1=\"" << axis_y << "\" x2=\"" << x << "\" y2=\"" << axis_y + 4
		   << "\" stroke=\"#000000\"/>\n";
		os << "  <text x=\"" << x << "\" y=\"" << axis_y + 16 << "\" text-anchor=\"middle\">" << t
		   << "</text>\n";
	}
	os << "</svg>\n";
	return os.str();
}

} // namespace

GanttStyle gantt_style_from_string(std::string_view s)
{
	if (s == "ascii")
		return GanttStyle::ascii;
	if (s == "svg")
		return GanttStyle::svg;
	throw InputError("unknown gantt style '" + std::string(s) + "' (expected ascii or svg)");
}

InvalidSchedule::InvalidSchedule(std::vector<std::string> violations)
	: InputError(joined(violations)), violations_(std::move(violations))
{
}

std::string render_gantt(const Schedule& s, GanttStyle style)
{
	if (auto v = validate_schedule(s); !v.empty())
		throw InvalidSchedule(std::move(v));
	return style == GanttStyle::ascii ? ascii(s) : svg(s);
}

} // namespace srpt
