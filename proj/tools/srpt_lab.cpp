// srpt-lab: simulate SRPT, compute offline optima, and check the stated
// competitive ratios of the special input classes.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "srptlab/analysis.hpp"
#include "srptlab/gantt.hpp"
#include "srptlab/io.hpp"
#include "srptlab/opt.hpp"
#include "srptlab/srpt.hpp"
#include "srptlab/workload.hpp"

namespace {

using namespace srpt;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_mismatch = 2;

struct SourceArgs {
	std::string in;
	std::string cls;
	int n = 0;
	std::optional<int> m;
	std::optional<Time> processing;
	std::string s3 = "literal-2n";
	bool no_enforce = false;

	void attach(CLI::App* cmd)
	{
		auto* in_opt = cmd->add_option("--in", in, "Instance file (JSON)");
		auto* cls_opt = cmd->add_option("--class", cls, "Generated class: S1..S5 or parametric");
		in_opt->excludes(cls_opt);
		cmd->add_option("--n", n, "Class parameter n");
		cmd->add_option("--m", m, "Machine count (required for S1 and parametric)");
		cmd->add_option("--processing", processing, "Processing time for the parametric class");
		cmd->add_option("--s3", s3, "S3 reading: literal-2n or theorem-n-plus-2");
		cmd->add_flag("--no-enforce", no_enforce, "Accept instances with n < m or processing < m");
	}

	Instance load() const
	{
		ParseOptions opts{!no_enforce};
		if (!in.empty())
			return materialize(parse_instance(read_file(in), opts));
		if (cls.empty())
			throw InputError("supply either --in FILE or --class NAME");
		ClassSpec spec;
		spec.class_id = class_from_string(cls);
		spec.n = n;
		spec.m = m;
		spec.processing_override = processing;
		spec.s3 = s3_interpretation_from_string(s3);
		Instance inst = generate(spec);
		if (opts.enforce_constraints)
			check_constraints(inst);
		return inst;
	}
};

struct CeilingArgs {
	std::string config;
	std::optional<int> max_jobs;
	std::optional<int> max_machines;
	std::optional<Time> max_work;

	void attach(CLI::App* cmd)
	{
		cmd->add_option("--config", config, "JSON config with a brute_force ceiling object");
		cmd->add_option("--max-jobs", max_jobs, "Brute-force ceiling on n");
		cmd->add_option("--max-machines", max_machines, "Brute-force ceiling on m");
		cmd->add_option("--max-work", max_work, "Brute-force ceiling on total work");
	}

	SearchCeiling resolve() const
	{
		SearchCeiling c;
		if (!config.empty()) {
			auto doc = nlohmann::json::parse(read_file(config), nullptr, false);
			if (doc.is_discarded() || !doc.is_object())
				throw InputError("config '" + config + "' is not a JSON object");
			if (auto it = doc.find("brute_force"); it != doc.end()) {
				c.max_jobs = it->value("max_jobs", c.max_jobs);
				c.max_machines = it->value("max_machines", c.max_machines);
				c.max_total_work = it->value("max_total_work", c.max_total_work);
			}
		}
		if (max_jobs)
			c.max_jobs = *max_jobs;
		if (max_machines)
			c.max_machines = *max_machines;
		if (max_work)
			c.max_total_work = *max_work;
		return c;
	}
};

void emit(const std::string& path, const std::string& contents)
{
	if (path.empty() || path == "-")
		std::cout << contents;
	else
		write_file(path, contents);
}

void print_summary(const Schedule& s, std::string_view label)
{
	std::cout << label << " makespan " << s.makespan() << '\n';
	std::cout << write_schedule(s);
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"srpt-lab: SRPT scheduling laboratory"};
	app.require_subcommand(1);

	// simulate
	SourceArgs sim_src;
	std::string sim_policy = "reassign-all";
	std::string sim_gantt;
	std::string sim_out;
	std::string sim_schedule_out;
	auto* sim = app.add_subcommand("simulate", "Run SRPT on an instance");
	sim_src.attach(sim);
	sim->add_option("--policy", sim_policy, "reassign-all or sticky");
	sim->add_option("--gantt", sim_gantt, "Render a timing diagram: ascii or svg");
	sim->add_option("--out", sim_out, "Diagram output path (default stdout)");
	sim->add_option("--schedule-out", sim_schedule_out, "Write the schedule dump here");

	// opt
	SourceArgs opt_src;
	CeilingArgs opt_ceiling;
	std::string opt_method = "mcnaughton";
	bool opt_releases = false;
	std::string opt_gantt;
	std::string opt_out;
	auto* opt = app.add_subcommand("opt", "Compute an offline optimum makespan");
	opt_src.attach(opt);
	opt_ceiling.attach(opt);
	opt->add_option("--method", opt_method, "paper, mcnaughton or brute")
		->check(CLI::IsMember({"paper", "mcnaughton", "brute"}));
	opt->add_flag("--respect-releases", opt_releases, "Brute force honours arrival times");
	opt->add_option("--gantt", opt_gantt, "Render the witness schedule: ascii or svg");
	opt->add_option("--out", opt_out, "Diagram output path (default stdout)");

	// sweep
	std::string sweep_cls = "S1";
	int sweep_lo = 2;
	int sweep_hi = 16;
	std::optional<int> sweep_m;
	std::string sweep_s3 = "literal-2n";
	std::string sweep_policy = "reassign-all";
	auto* sweep = app.add_subcommand("sweep", "Tabulate SRPT against the optimum over a range of n");
	sweep->add_option("--class", sweep_cls, "S1..S5");
	sweep->add_option("--n-min", sweep_lo);
	sweep->add_option("--n-max", sweep_hi);
	sweep->add_option("--m", sweep_m, "Fixed machine count (default m = n)");
	sweep->add_option("--s3", sweep_s3);
	sweep->add_option("--policy", sweep_policy);

	// verify-theorems
	int ver_hi = 64;
	int ver_lo = 2;
	std::string ver_format = "text";
	std::string ver_out;
	std::string ver_disc;
	CeilingArgs ver_ceiling;
	auto* ver = app.add_subcommand("verify-theorems", "Check every stated makespan and ratio");
	ver->add_option("--n-min", ver_lo);
	ver->add_option("--n-max", ver_hi);
	ver->add_option("--format", ver_format)->check(CLI::IsMember({"text", "csv"}));
	ver->add_option("--out", ver_out, "Verdict table path (default stdout)");
	ver->add_option("--discrepancy-out", ver_disc,
	                "Discrepancy report path (default discrepancy_report.txt beside --out)");
	ver_ceiling.attach(ver);

	// render
	std::string ren_in;
	std::string ren_style = "ascii";
	std::string ren_out;
	auto* ren = app.add_subcommand("render", "Draw a schedule dump as a timing diagram");
	ren->add_option("--in", ren_in, "Schedule dump")->required();
	ren->add_option("--gantt", ren_style, "ascii or svg");
	ren->add_option("--out", ren_out);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e) == 0 ? exit_ok : exit_input;
	}

	try {
		if (*sim) {
			const Instance inst = sim_src.load();
			const auto result = simulate_srpt(inst, {migration_from_string(sim_policy)});
			if (!sim_schedule_out.empty())
				write_file(sim_schedule_out, write_schedule(result.schedule));
			if (!sim_gantt.empty())
				emit(sim_out, render_gantt(result.schedule, gantt_style_from_string(sim_gantt)));
			if (sim_gantt.empty() || (!sim_out.empty() && sim_out != "-"))
				print_summary(result.schedule, "srpt");
			return exit_ok;
		}

		if (*opt) {
			const Instance inst = opt_src.load();
			OptResult r;
			if (opt_method == "paper")
				r = paper_opt(inst);
			else if (opt_method == "mcnaughton")
				r = mcnaughton(inst);
			else
				r = brute_force_opt(inst, opt_releases, opt_ceiling.resolve());
			if (!opt_gantt.empty()) {
				if (!r.schedule)
					throw InputError("method " + std::string(to_string(r.method)) + " produces no schedule");
				emit(opt_out, render_gantt(*r.schedule, gantt_style_from_string(opt_gantt)));
				if (opt_out.empty() || opt_out == "-")
					return exit_ok;
			}
			std::cout << to_string(r.method) << " makespan " << r.makespan << '\n';
			if (r.schedule)
				std::cout << write_schedule(*r.schedule);
			return exit_ok;
		}

		if (*sweep) {
			const auto policy = migration_from_string(sweep_policy);
			std::cout << "n,m,jobs,w_srpt,w_opt_mcnaughton,cr_num,cr_den\n";
			for (int n = sweep_lo; n <= sweep_hi; ++n) {
				ClassSpec spec;
				spec.class_id = class_from_string(sweep_cls);
				spec.n = n;
				spec.m = sweep_m ? sweep_m : std::optional<int>(n);
				spec.s3 = s3_interpretation_from_string(sweep_s3);
				const Instance inst = generate(spec);
				const Time w = simulate_srpt(inst, {policy}).schedule.makespan();
				const Time o = mcnaughton(inst).makespan;
				const Rational cr = competitive_ratio(w, o);
				std::cout << n << ',' << inst.machines() << ',' << inst.size() << ',' << w << ',' << o << ','
				          << cr.num() << ',' << cr.den() << '\n';
			}
			return exit_ok;
		}

		if (*ver) {
			VerifyOptions opts;
			opts.ceiling = ver_ceiling.resolve();
			const auto reports = verify_all({ver_lo, ver_hi}, opts);
			emit(ver_out, emit_reports(reports, report_format_from_string(ver_format)));

			std::string disc_path = ver_disc;
			if (disc_path.empty()) {
				std::filesystem::path base = ver_out.empty() || ver_out == "-" ? std::filesystem::path(".")
				                                                                : std::filesystem::path(ver_out).parent_path();
				disc_path = (base / "discrepancy_report.txt").string();
			}
			std::string disc = discrepancy_report(reports);
			const auto s5 = measure_class(ClassId::S5, {ver_lo, ver_hi}, opts);
			if (!s5.empty()) {
				disc += "\nS5 (no stated ratio; optimum = McNaughton)\n";
				for (const auto& r : s5)
					disc += "  n=" + std::to_string(r.n) + " " + std::string(to_string(r.policy)) +
					        " w_srpt=" + std::to_string(r.srpt) + " w_opt=" + std::to_string(r.opt) +
					        " cr=" + r.cr.str() + "\n";
			}
			write_file(disc_path, disc);

			for (const auto& rep : reports)
				if (rep.summary() == Verdict::mismatch)
					return exit_mismatch;
			return exit_ok;
		}

		if (*ren) {
			const Schedule s = read_schedule(read_file(ren_in));
			emit(ren_out, render_gantt(s, gantt_style_from_string(ren_style)));
			return exit_ok;
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_input;
	}
	return exit_ok;
}
