#include "doctest.h"

#include "srptlab/srpt.hpp"
#include "srptlab/workload.hpp"

using namespace srpt;

namespace {

ClassSpec spec(ClassId c, int n, std::optional<int> m = std::nullopt)
{
	ClassSpec s;
	s.class_id = c;
	s.n = n;
	s.m = m;
	return s;
}

std::vector<Time> arrivals(const Instance& inst)
{
	std::vector<Time> out;
	for (const auto& j : inst.jobs())
		out.push_back(j.arrival);
	return out;
}

} // namespace

TEST_CASE("[workload] S1 n=3 m=2")
{
	auto inst = generate(spec(ClassId::S1, 3, 2));
	CHECK(inst.size() == 3);
	CHECK(inst.machines() == 2);
	CHECK(arrivals(inst) == std::vector<Time>{0, 1, 2});
	for (const auto& j : inst.jobs())
		CHECK(j.processing == 3);
}

TEST_CASE("[workload] S4 n=2")
{
	auto inst = generate(spec(ClassId::S4, 2));
	CHECK(inst.size() == 4);
	CHECK(inst.machines() == 2);
	CHECK(arrivals(inst) == std::vector<Time>{0, 1, 2, 3});
	CHECK(inst.max_processing() == 2);
	CHECK(inst.min_processing() == 2);
}

TEST_CASE("[workload] S3 interpretations")
{
	auto s = spec(ClassId::S3, 3);
	CHECK(generate(s).max_processing() == 6);
	s.s3 = S3Interpretation::theorem_n_plus_2;
	auto inst = generate(s);
	CHECK(inst.size() == 3);
	CHECK(inst.machines() == 3);
	CHECK(inst.min_processing() == 5);
	CHECK(inst.max_processing() == 5);
	// only the n+2 reading reproduces the stated 2n+1 = 7
	CHECK(simulate_srpt(inst).schedule.makespan() == 7);
	CHECK(simulate_srpt(generate(spec(ClassId::S3, 3))).schedule.makespan() == 8);
}

TEST_CASE("[workload] S2 and S5")
{
	auto s2 = generate(spec(ClassId::S2, 3));
	CHECK(s2.size() == 3);
	CHECK(s2.min_processing() == 4);
	CHECK(s2.machines() == 3);
	auto s5 = generate(spec(ClassId::S5, 3));
	CHECK(s5.size() == 6);
	CHECK(s5.min_processing() == 6);
	CHECK(s5.machines() == 3);
}

TEST_CASE("[workload] parametric single unit job")
{
	auto s = spec(ClassId::parametric, 1, 1);
	s.processing_override = 1;
	auto inst = generate(s);
	CHECK(inst.jobs() == std::vector<Job>{{1, 0, 1}});
	CHECK(inst.machines() == 1);
}

TEST_CASE("[workload] spec validation")
{
	CHECK_THROWS_AS(generate(spec(ClassId::S1, 3)), InputError);
	CHECK_THROWS_AS(generate(spec(ClassId::S2, 0)), InputError);
	CHECK_THROWS_AS(generate(spec(ClassId::S2, 2, 0)), InputError);
	auto s = spec(ClassId::S2, 2);
	s.processing_override = 3;
	CHECK_THROWS_AS(generate(s), InputError);
	CHECK_THROWS_AS(class_from_string("S9"), InputError);
}

TEST_CASE("[workload] theorem defaults satisfy the operating constraints")
{
	for (int n = 1; n <= 40; ++n) {
		for (auto c : {ClassId::S2, ClassId::S3, ClassId::S4, ClassId::S5}) {
			for (auto r : {S3Interpretation::literal_2n, S3Interpretation::theorem_n_plus_2}) {
				auto s = spec(c, n);
				s.s3 = r;
				auto inst = generate(s);
				CHECK(inst.paper_constrained());
				CHECK(inst == generate(s));
				for (std::size_t i = 0; i < inst.size(); ++i)
					CHECK(inst.jobs()[i].arrival == static_cast<Time>(i));
			}
		}
		CHECK(generate(spec(ClassId::S1, n, n)).paper_constrained());
		if (n >= 2)
			CHECK(generate(spec(ClassId::S1, n, 2)).paper_constrained());
	}
}
