#include "doctest.h"

#include "srptlab/gantt.hpp"
#include "srptlab/io.hpp"
#include "srptlab/srpt.hpp"
#include "srptlab/workload.hpp"

using namespace srpt;

namespace {

Schedule s1_n2_m2()
{
	ClassSpec s;
	s.n = 2;
	s.m = 2;
	return simulate_srpt(generate(s)).schedule;
}

} // namespace

TEST_CASE("[gantt] ascii golden for S1 n=2 m=2")
{
	const auto out = render_gantt(s1_n2_m2(), GanttStyle::ascii);
	CHECK(out == read_file(std::string(SRPT_GOLDEN_DIR) + "/s1_n2_m2.txt"));
	CHECK(out.find("P1: |J1 J1 .|\n") == 0);
	CHECK(out.find("P2: |. J2 J2|\n") != std::string::npos);
}

TEST_CASE("[gantt] unused machine renders idle")
{
	auto s = simulate_srpt(Instance({{1, 0, 3}}, 2)).schedule;
	CHECK(render_gantt(s, GanttStyle::ascii) == "P1: |J1 J1 J1|\nP2: |. . .|\nt:   0..3\n");
}

TEST_CASE("[gantt] rendering is deterministic")
{
	for (auto style : {GanttStyle::ascii, GanttStyle::svg})
		CHECK(render_gantt(s1_n2_m2(), style) == render_gantt(s1_n2_m2(), style));
}

TEST_CASE("[gantt] svg layout")
{
	const auto svg = render_gantt(s1_n2_m2(), GanttStyle::svg);
	CHECK(svg.find("version=\"1.1\"") != std::string::npos);
	// J1 on P1 over [0,2): 2 units at 40px from the 48px margin
	CHECK(svg.find("<rect x=\"48\" y=\"10\" width=\"80\" height=\"30\"") != std::string::npos);
	CHECK(svg.find("<rect x=\"88\" y=\"40\" width=\"80\" height=\"30\"") != std::string::npos);
	CHECK(svg.find(">P2</text>") != std::string::npos);
	CHECK(svg.find(">3</text>") != std::string::npos);
}

TEST_CASE("[gantt] invalid schedules are refused")
{
	Instance inst({{1, 0, 2}}, 1);
	Schedule broken(inst, {{1, 1, 0, 1}});
	try {
		render_gantt(broken, GanttStyle::ascii);
		FAIL("expected InvalidSchedule");
	} catch (const InvalidSchedule& e) {
		REQUIRE(e.violations().size() == 1);
		CHECK(e.violations()[0] == "job 1 received 1 of 2 units");
	}
}

TEST_CASE("[gantt] wide machine labels stay aligned")
{
	std::vector<Job> jobs;
	for (int i = 1; i <= 10; ++i)
		jobs.push_back({i, 0, 1});
	auto out = render_gantt(simulate_srpt(Instance(jobs, 10)).schedule, GanttStyle::ascii);
	CHECK(out.find("P1:  |J1|\n") == 0);
	CHECK(out.find("P10: |J10|\n") != std::string::npos);
}
