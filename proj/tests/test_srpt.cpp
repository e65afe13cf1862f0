#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "srptlab/opt.hpp"
#include "srptlab/srpt.hpp"
#include "srptlab/workload.hpp"

using namespace srpt;

namespace {

Instance cls(ClassId c, int n, std::optional<int> m = std::nullopt)
{
	ClassSpec s;
	s.class_id = c;
	s.n = n;
	s.m = m;
	return generate(s);
}

Time makespan(const Instance& inst, Migration p = Migration::reassign_all)
{
	auto r = simulate_srpt(inst, {p});
	REQUIRE(validate_schedule(r.schedule).empty());
	return r.schedule.makespan();
}

// Checks every engine postcondition that can be read off a single run.
void check_run(const Instance& inst, Migration policy)
{
	const auto r = simulate_srpt(inst, {policy});
	const auto& epochs = r.trace.epochs;
	REQUIRE(validate_schedule(r.schedule).empty());
	REQUIRE_FALSE(epochs.empty());

	std::set<Time> expected;
	for (const auto& j : inst.jobs())
		expected.insert(j.arrival);
	for (auto c : r.schedule.completion_times())
		expected.insert(c);
	std::set<Time> got;
	for (std::size_t i = 0; i < epochs.size(); ++i) {
		got.insert(epochs[i].time);
		if (i)
			CHECK(epochs[i - 1].time < epochs[i].time);
	}
	CHECK(got == expected);
	CHECK(epochs.back().time == r.schedule.makespan());

	for (std::size_t e = 0; e < epochs.size(); ++e) {
		const auto& ep = epochs[e];
		std::set<JobId> assigned;
		std::size_t busy = 0;
		for (auto id : ep.assignment)
			if (id != 0) {
				assigned.insert(id);
				++busy;
			}
		CHECK(busy == assigned.size());
		CHECK(busy == std::min<std::size_t>(ep.remaining.size(), static_cast<std::size_t>(inst.machines())));

		for (const auto& [a, ra] : ep.remaining) {
			if (!assigned.count(a))
				continue;
			for (const auto& [u, ru] : ep.remaining) {
				if (assigned.count(u))
					continue;
				CHECK((ra < ru || (ra == ru && a < u)));
			}
		}

		bool arrival = false;
		for (const auto& j : inst.jobs())
			arrival = arrival || j.arrival == ep.time;
		if (policy == Migration::reassign_all && arrival) {
			std::vector<std::pair<Time, JobId>> order;
			for (const auto& [id, rem] : ep.remaining)
				order.emplace_back(rem, id);
			std::sort(order.begin(), order.end());
			for (std::size_t k = 0; k < busy; ++k)
				CHECK(ep.assignment[k] == order[k].second);
		} else if (e > 0) {
			const auto& prev = epochs[e - 1];
			for (std::size_t mi = 0; mi < prev.assignment.size(); ++mi) {
				const JobId was = prev.assignment[mi];
				if (was != 0 && assigned.count(was))
					CHECK(ep.assignment[mi] == was);
			}
		}

		if (e + 1 < epochs.size()) {
			const auto& next = epochs[e + 1];
			const Time gap = next.time - ep.time;
			auto before = remaining_profile(r.trace, ep.time);
			auto after = remaining_profile(r.trace, next.time);
			for (auto id : assigned) {
				const Time left = before[id] - gap;
				if (left > 0)
					CHECK(after[id] == left);
			}
		}
	}
}

} // namespace

TEST_CASE("[srpt] S1 n=2 m=2")
{
	CHECK(makespan(cls(ClassId::S1, 2, 2)) == 3);
}

TEST_CASE("[srpt] S1 n=m=3")
{
	CHECK(makespan(cls(ClassId::S1, 3, 3)) == 5);
}

TEST_CASE("[srpt] S4 n=2")
{
	CHECK(makespan(cls(ClassId::S4, 2)) == 5);
}

TEST_CASE("[srpt] single job without contention")
{
	auto r = simulate_srpt(Instance({{1, 0, 7}}, 3));
	CHECK(r.schedule.makespan() == 7);
	REQUIRE(r.schedule.segments().size() == 1);
	CHECK(r.schedule.segments()[0] == Segment{1, 1, 0, 7});
}

TEST_CASE("[srpt] S1 n=4 m=2 against the stated 10")
{
	// Hand trace (reassign-all): J1 and J2 run until J1 ends at 4, J2 at 5,
	// then J3 and J4 run side by side and finish at 8 and 9.
	const auto inst = cls(ClassId::S1, 4, 2);
	auto r = simulate_srpt(inst);
	CHECK(r.schedule.makespan() == 9);
	CHECK(r.schedule.completion_times() == std::vector<Time>{4, 5, 8, 9});
	CHECK(makespan(inst, Migration::sticky) == 9);
	// P2 idles during [0,1), so 15 units of capacity by t=8 cannot cover 16
	CHECK(brute_force_opt(inst, true).makespan == 9);
}

TEST_CASE("[srpt] remaining profile")
{
	auto s1 = simulate_srpt(cls(ClassId::S1, 2, 2));
	CHECK(remaining_profile(s1.trace, 1) == std::map<JobId, Time>{{1, 1}, {2, 2}});
	CHECK(remaining_profile(s1.trace, 0) == std::map<JobId, Time>{{1, 2}});

	auto s4 = simulate_srpt(cls(ClassId::S4, 2));
	CHECK(remaining_profile(s4.trace, 2) == std::map<JobId, Time>{{2, 1}, {3, 2}});

	Instance together({{1, 0, 3}, {2, 0, 5}, {3, 2, 1}}, 1);
	auto t = simulate_srpt(together);
	CHECK(remaining_profile(t.trace, 0) == std::map<JobId, Time>{{1, 3}, {2, 5}});
	CHECK_THROWS_AS(remaining_profile(s1.trace, 7), InputError);
}

TEST_CASE("[srpt] equal remaining goes to the lower id")
{
	Instance inst({{1, 0, 2}, {2, 0, 2}, {3, 0, 2}}, 2);
	auto r = simulate_srpt(inst);
	CHECK(r.trace.epochs.front().assignment == std::vector<JobId>{1, 2});
}

TEST_CASE("[srpt] reassign-all migrates, sticky does not")
{
	// J3 arrives at t=1 with the least remaining work and displaces J2.
	// reassign-all puts J3 on P1 and moves J1 to P2; sticky leaves J1 on P1.
	Instance inst({{1, 0, 3}, {2, 0, 4}, {3, 1, 1}}, 2);
	auto a = simulate_srpt(inst, {Migration::reassign_all});
	auto s = simulate_srpt(inst, {Migration::sticky});
	CHECK(a.trace.epochs[1].assignment == std::vector<JobId>{3, 1});
	CHECK(s.trace.epochs[1].assignment == std::vector<JobId>{1, 3});
	CHECK(validate_schedule(a.schedule).empty());
	CHECK(validate_schedule(s.schedule).empty());
}

TEST_CASE("[srpt] completions do not interrupt running jobs")
{
	// J1 ends at 2; J2 keeps P2 instead of moving to the freed P1
	Instance inst({{1, 0, 2}, {2, 1, 2}}, 2);
	auto r = simulate_srpt(inst);
	CHECK(r.schedule.segments() == std::vector<Segment>{{1, 1, 0, 2}, {2, 2, 1, 3}});
	CHECK(r.trace.epochs[2].assignment == std::vector<JobId>{0, 2});
}

TEST_CASE("[srpt] idle gap between arrivals")
{
	Instance inst({{1, 0, 2}, {2, 5, 1}}, 1);
	auto r = simulate_srpt(inst);
	CHECK(r.schedule.makespan() == 6);
	std::vector<Time> times;
	for (const auto& e : r.trace.epochs)
		times.push_back(e.time);
	CHECK(times == std::vector<Time>{0, 2, 5, 6});
	CHECK(r.trace.epochs[1].remaining.empty());
}

TEST_CASE("[srpt] accepts instances outside the operating constraints")
{
	Instance inst({{1, 0, 1}, {2, 0, 1}}, 3);
	CHECK(makespan(inst) == 1);
}

TEST_CASE("[srpt] random instances satisfy every engine property")
{
	std::mt19937 rng(20240601);
	for (int i = 0; i < 600; ++i) {
		auto inst = oracle::random_instance(rng, 8, 4, 6, 8);
		for (auto p : {Migration::reassign_all, Migration::sticky}) {
			check_run(inst, p);
			auto reference = oracle::unit_step_srpt(inst, p);
			auto r = simulate_srpt(inst, {p});
			CHECK(r.schedule.segments() == reference);
			auto again = simulate_srpt(inst, {p});
			CHECK(again.trace == r.trace);
			CHECK(again.schedule.segments() == r.schedule.segments());
		}
	}
}

TEST_CASE("[srpt] completion order follows job index on generated classes")
{
	for (int n = 1; n <= 12; ++n) {
		for (auto c : {ClassId::S1, ClassId::S2, ClassId::S3, ClassId::S4, ClassId::S5}) {
			std::vector<std::optional<int>> ms{std::nullopt};
			if (c == ClassId::S1)
				ms = {2, n};
			for (auto m : ms) {
				for (auto p : {Migration::reassign_all, Migration::sticky}) {
					auto r = simulate_srpt(cls(c, n, m), {p});
					auto done = r.schedule.completion_times();
					CHECK(std::is_sorted(done.begin(), done.end()));
				}
			}
		}
	}
}

TEST_CASE("[srpt] never beats the release-respecting optimum")
{
	std::mt19937 rng(99);
	for (int i = 0; i < 300; ++i) {
		auto inst = oracle::random_instance(rng, 5, 3, 4, 4);
		auto opt = brute_force_opt(inst, true);
		for (auto p : {Migration::reassign_all, Migration::sticky})
			CHECK(simulate_srpt(inst, {p}).schedule.makespan() >= opt.makespan);
	}
}
