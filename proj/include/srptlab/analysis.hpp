#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srptlab/opt.hpp"
#include "srptlab/rational.hpp"
#include "srptlab/srpt.hpp"
#include "srptlab/workload.hpp"

namespace srpt {

// w_SRPT / w_OPT as an exact fraction. Throws InputError when opt < 1.
Rational competitive_ratio(Time srpt_makespan, Time opt_makespan);

enum class TheoremId { T3_1, T3_2, T3_3, T3_4, T3_5 };

std::string_view to_string(TheoremId t);

/// A competitiveness claim: the input class it concerns and the makespans
/// and ratio it states, each as a function of the class parameter n.
struct TheoremSpec {
	TheoremId id = TheoremId::T3_1;
	std::string label;
	std::function<ClassSpec(int)> make_class;
	std::function<Time(int)> claimed_srpt;
	std::function<Time(int)> claimed_opt;
	std::function<Rational(int)> claimed_cr;
	std::function<bool(int)> applicable;
	// the final competitiveness bound, when the claim states one as a constant
	std::optional<Rational> bound;
};

// T3.4 is parameterised by how class S3 is read; other ids ignore it.
TheoremSpec theorem_spec(TheoremId id, S3Interpretation s3 = S3Interpretation::theorem_n_plus_2);

// Every stored claim, with T3.4 once per S3 interpretation (n+2 first).
std::vector<TheoremSpec> all_theorem_specs();

enum class Verdict { pass, mismatch, not_applicable };

std::string_view to_string(Verdict v);

struct TheoremRow {
	int n = 0;
	Migration policy = Migration::reassign_all;
	Time srpt_measured = 0;
	Time srpt_claimed = 0;
	Time opt_measured = 0;
	Time opt_claimed = 0;
	Time mcnaughton = 0;
	// brute-force optimum honouring arrivals; empty beyond the search ceiling
	std::optional<Time> opt_with_releases;
	Rational cr_measured;
	Rational cr_claimed;
	Verdict srpt_verdict = Verdict::not_applicable;
	Verdict opt_verdict = Verdict::not_applicable;
	Verdict cr_verdict = Verdict::not_applicable;

	Verdict verdict() const;
};

struct TheoremReport {
	TheoremId id = TheoremId::T3_1;
	std::string label;
	std::vector<TheoremRow> rows;

	Verdict summary() const;
};

struct NRange {
	int lo = 2;
	int hi = 64;

	bool empty() const { return lo > hi; }
};

struct VerifyOptions {
	std::vector<Migration> policies{Migration::reassign_all, Migration::sticky};
	SearchCeiling ceiling;
	// run the release-respecting brute-force optimum where the ceiling admits
	bool release_optimum = true;
};

TheoremReport verify_theorem(const TheoremSpec& spec, NRange range, const VerifyOptions& opts = {});

std::vector<TheoremReport> verify_all(NRange range, const VerifyOptions& opts = {});

// One flag per row: measured CR <= bound, compared exactly.
std::vector<bool> bound_check(const TheoremReport& report, const Rational& bound);

/// Measured values for a class that carries no claim (S5).
struct MeasuredRow {
	int n = 0;
	Migration policy = Migration::reassign_all;
	Time srpt = 0;
	Time opt = 0;
	Rational cr;
};

std::vector<MeasuredRow> measure_class(ClassId cls, NRange range, const VerifyOptions& opts = {});

struct Discrepancy {
	std::string theorem;
	int n = 0;
	Migration policy = Migration::reassign_all;
	std::string field;
	std::string measured;
	std::string claimed;

	friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

// Every (row, field) where a measured value differs from the stated one.
std::vector<Discrepancy> collect_discrepancies(const std::vector<TheoremReport>& reports);

// Plain-text consolidated discrepancy report; empty string for empty range.
std::string discrepancy_report(const std::vector<TheoremReport>& reports);
std::string discrepancy_report(NRange range, const VerifyOptions& opts = {});

} // namespace srpt
