#include "srptlab/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace srpt {

Rational competitive_ratio(Time srpt_makespan, Time opt_makespan)
{
	if (opt_makespan < 1)
		throw InputError("competitive ratio needs an optimum makespan >= 1");
	return Rational(srpt_makespan, opt_makespan);
}

std::string_view to_string(TheoremId t)
{
	switch (t) {
	case TheoremId::T3_1:
		return "T3.1";
	case TheoremId::T3_2:
		return "T3.2";
	case TheoremId::T3_3:
		return "T3.3";
	case TheoremId::T3_4:
		return "T3.4";
	case TheoremId::T3_5:
		return "T3.5";
	}
	return "?";
}

std::string_view to_string(Verdict v)
{
	switch (v) {
	case Verdict::pass:
		return "PASS";
	case Verdict::mismatch:
		return "MISMATCH";
	case Verdict::not_applicable:
		return "N-A";
	}
	return "?";
}

namespace {

ClassSpec class_spec(ClassId c, int n, std::optional<int> m,
                     S3Interpretation s3 = S3Interpretation::literal_2n)
{
	ClassSpec spec;
	spec.class_id = c;
	spec.n = n;
	spec.m = m;
	spec.s3 = s3;
	return spec;
}

bool any_n(int n) { return n >= 1; }

Verdict compare(const auto& measured, const auto& claimed)
{
	return measured == claimed ? Verdict::pass : Verdict::mismatch;
}

} // namespace

TheoremSpec theorem_spec(TheoremId id, S3Interpretation s3)
{
	TheoremSpec t;
	t.id = id;
	t.label = std::string(to_string(id));
	t.applicable = any_n;
	switch (id) {
	case TheoremId::T3_1:
		// S1 on two machines, n even; the stated ratio is bounded by 3/2
		t.make_class = [](int n) { return class_spec(ClassId::S1, n, 2); };
		t.claimed_srpt = [](int n) { return Time{n} * (n + 1) / 2; };
		t.claimed_opt = [](int n) { return Time{n} * n / 2; };
		t.claimed_cr = [](int n) { return Rational(n + 1, n); };
		t.applicable = [](int n) { return n >= 2 && n % 2 == 0; };
		t.bound = Rational(3, 2);
		break;
	case TheoremId::T3_2:
		t.make_class = [](int n) { return class_spec(ClassId::S1, n, n); };
		t.claimed_srpt = [](int n) { return Time{2} * n - 1; };
		t.claimed_opt = [](int n) { return Time{n}; };
		t.claimed_cr = [](int n) { return Rational(2, 1) - Rational(1, n); };
		break;
	case TheoremId::T3_3:
		t.make_class = [](int n) { return class_spec(ClassId::S2, n, std::nullopt); };
		t.claimed_srpt = [](int n) { return Time{2} * n; };
		t.claimed_opt = [](int n) { return Time{n} + 1; };
		t.claimed_cr = [](int n) { return Rational(2, 1) - Rational(2, n + 1); };
		break;
	case TheoremId::T3_4:
		t.label += "/" + std::string(to_string(s3));
		t.make_class = [s3](int n) { return class_spec(ClassId::S3, n, std::nullopt, s3); };
		t.claimed_srpt = [](int n) { return Time{2} * n + 1; };
		t.claimed_opt = [](int n) { return Time{n} + 2; };
		t.claimed_cr = [](int n) { return Rational(2, 1) - Rational(3, n + 2); };
		break;
	case TheoremId::T3_5:
		t.make_class = [](int n) { return class_spec(ClassId::S4, n, std::nullopt); };
		t.claimed_srpt = [](int n) { return Time{3} * n - 1; };
		t.claimed_opt = [](int n) { return Time{2} * n; };
		t.claimed_cr = [](int n) { return Rational(3, 2) - Rational(1, 2 * n); };
		break;
	}
	return t;
}

std::vector<TheoremSpec> all_theorem_specs()
{
	return {
		theorem_spec(TheoremId::T3_1),
		theorem_spec(TheoremId::T3_2),
		theorem_spec(TheoremId::T3_3),
		theorem_spec(TheoremId::T3_4, S3Interpretation::theorem_n_plus_2),
		theorem_spec(TheoremId::T3_4, S3Interpretation::literal_2n),
		theorem_spec(TheoremId::T3_5),
	};
}

Verdict TheoremRow::verdict() const
{
	for (auto v : {srpt_verdict, opt_verdict, cr_verdict})
		if (v == Verdict::mismatch)
			return Verdict::mismatch;
	for (auto v : {srpt_verdict, opt_verdict, cr_verdict})
		if (v == Verdict::not_applicable)
			return Verdict::not_applicable;
	return Verdict::pass;
}

Verdict TheoremReport::summary() const
{
	if (rows.empty())
		return Verdict::not_applicable;
	bool all_na = true;
	for (const auto& r : rows) {
		auto v = r.verdict();
		if (v == Verdict::mismatch)
			return Verdict::mismatch;
		all_na = all_na && v == Verdict::not_applicable;
	}
	return all_na ? Verdict::not_applicable : Verdict::pass;
}

TheoremReport verify_theorem(const TheoremSpec& spec, NRange range, const VerifyOptions& opts)
{
	TheoremReport report;
	report.id = spec.id;
	report.label = spec.label;
	for (int n = range.lo; n <= range.hi; ++n) {
		if (!spec.applicable(n))
			continue;
		const Instance inst = generate(spec.make_class(n));
		const Time opt = paper_opt(inst).makespan;
		const Time mc = mcnaughton(inst).makespan;
		std::optional<Time> with_releases;
		if (opts.release_optimum && opts.ceiling.admits(inst))
			with_releases = brute_force_opt(inst, true, opts.ceiling).makespan;

		for (auto policy : opts.policies) {
			TheoremRow row;
			row.n = n;
			row.policy = policy;
			row.srpt_measured = simulate_srpt(inst, {policy}).schedule.makespan();
			row.srpt_claimed = spec.claimed_srpt(n);
			row.opt_measured = opt;
			row.opt_claimed = spec.claimed_opt(n);
			row.mcnaughton = mc;
			row.opt_with_releases = with_releases;
			row.cr_measured = competitive_ratio(row.srpt_measured, row.opt_measured);
			row.cr_claimed = spec.claimed_cr(n);
			row.srpt_verdict = compare(row.srpt_measured, row.srpt_claimed);
			row.opt_verdict = compare(row.opt_measured, row.opt_claimed);
			row.cr_verdict = compare(row.cr_measured, row.cr_claimed);
			report.rows.push_back(row);
		}
	}
	return report;
}

std::vector<TheoremReport> verify_all(NRange range, const VerifyOptions& opts)
{
	std::vector<TheoremReport> out;
	for (const auto& spec : all_theorem_specs())
		out.push_back(verify_theorem(spec, range, opts));
	return out;
}

std::vector<bool> bound_check(const TheoremReport& report, const Rational& bound)
{
	std::vector<bool> out;
	out.reserve(report.rows.size());
	for (const auto& r : report.rows)
		out.push_back(r.cr_measured <= bound);
	return out;
}

std::vector<MeasuredRow> measure_class(ClassId cls, NRange range, const VerifyOptions& opts)
{
	std::vector<MeasuredRow> out;
	for (int n = range.lo; n <= range.hi; ++n) {
		ClassSpec spec;
		spec.class_id = cls;
		spec.n = n;
		if (cls == ClassId::S1 || cls == ClassId::parametric)
			spec.m = n;
		const Instance inst = generate(spec);
		const Time opt = mcnaughton(inst).makespan;
		for (auto policy : opts.policies) {
			const Time w = simulate_srpt(inst, {policy}).schedule.makespan();
			out.push_back({n, policy, w, opt, competitive_ratio(w, opt)});
		}
	}
	return out;
}

std::vector<Discrepancy> collect_discrepancies(const std::vector<TheoremReport>& reports)
{
	std::vector<Discrepancy> out;
	for (const auto& rep : reports) {
		for (const auto& r : rep.rows) {
			auto add = [&](Verdict v, const char* field, std::string measured, std::string claimed) {
				if (v == Verdict::mismatch)
					out.push_back({rep.label, r.n, r.policy, field, std::move(measured), std::move(claimed)});
			};
			add(r.srpt_verdict, "w_srpt", std::to_string(r.srpt_measured), std::to_string(r.srpt_claimed));
			add(r.opt_verdict, "w_opt", std::to_string(r.opt_measured), std::to_string(r.opt_claimed));
			add(r.cr_verdict, "cr", r.cr_measured.str(), r.cr_claimed.str());
		}
	}
	return out;
}

std::string discrepancy_report(const std::vector<TheoremReport>& reports)
{
	bool any_rows = false;
	for (const auto& rep : reports)
		any_rows = any_rows || !rep.rows.empty();
	if (!any_rows)
		return {};

	std::ostringstream os;
	const auto items = collect_discrepancies(reports);
	os << "Discrepancies between measured and stated values (" << items.size() << ")\n";
	os << std::left << std::setw(24) << "theorem" << std::setw(5) << "n" << std::setw(14) << "policy"
	   << std::setw(8) << "field" << std::setw(12) << "measured" << "claimed\n";
	for (const auto& d : items) {
		os << std::setw(24) << d.theorem << std::setw(5) << d.n << std::setw(14) << to_string(d.policy)
		   << std::setw(8) << d.field << std::setw(12) << d.measured << d.claimed << '\n';
	}

	os << "\nPer-claim summary\n";
	for (const auto& rep : reports) {
		os << "  " << std::setw(24) << rep.label << to_string(rep.summary());
		if (auto b = theorem_spec(rep.id).bound; b && rep.id == TheoremId::T3_1 && !rep.rows.empty()) {
			auto ok = bound_check(rep, *b);
			bool all = std::all_of(ok.begin(), ok.end(), [](bool x) { return x; });
			os << "  (measured CR <= " << b->str() << " on " << (all ? "every" : "NOT every") << " row)";
		}
		os << '\n';
	}

	std::vector<std::string> s3_pass;
	for (const auto& rep : reports)
		if (rep.id == TheoremId::T3_4 && rep.summary() == Verdict::pass)
			s3_pass.push_back(rep.label);
	os << "  T3.4 interpretation(s) matching every stated value: ";
	if (s3_pass.empty())
		os << "none";
	for (std::size_t i = 0; i < s3_pass.size(); ++i)
		os << (i ? ", " : "") << s3_pass[i];
	os << '\n';

	for (const auto& rep : reports) {
		if (rep.id == TheoremId::T3_1 && !rep.rows.empty()) {
			os << "\nNot reproduced: the T3.1 ratio step (n^2+2)/n^2 does not follow from the stated\n"
			      "makespans n(n+1)/2 and n^2/2, whose quotient is (n+1)/n. Only the stated makespans\n"
			      "and the final 3/2 bound are checked.\n";
			break;
		}
	}

	os << "\nOptimum cross-checks (zero-release paper OPT, McNaughton, release-respecting brute force)\n";
	os << std::setw(24) << "theorem" << std::setw(5) << "n" << std::setw(10) << "paper" << std::setw(12)
	   << "mcnaughton" << "with-releases\n";
	for (const auto& rep : reports) {
		for (const auto& r : rep.rows) {
			if (r.policy != rep.rows.front().policy)
				continue;
			os << std::setw(24) << rep.label << std::setw(5) << r.n << std::setw(10) << r.opt_measured
			   << std::setw(12) << r.mcnaughton
			   << (r.opt_with_releases ? std::to_string(*r.opt_with_releases) : std::string("N-A")) << '\n';
		}
	}
	return os.str();
}

std::string discrepancy_report(NRange range, const VerifyOptions& opts)
{
	if (range.empty())
		return {};
	return discrepancy_report(verify_all(range, opts));
}

} // namespace srpt
