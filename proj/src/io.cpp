#include "srptlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace srpt {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
	: InputError(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
	                  : what),
	  line_(line), column_(column)
{
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
	std::size_t line = 1, col = 1;
	for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
		if (text[i] == '\n') {
			++line;
			col = 1;
		} else {
			++col;
		}
	}
	return {line, col};
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where)
{
	for (const auto& [key, _] : obj.items()) {
		if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
			throw ParseError("unknown field '" + key + "' in " + where, 0, 0);
	}
}

std::int64_t integer_field(const json& obj, const char* name, const std::string& where)
{
	const auto& v = obj.at(name);
	if (!v.is_number_integer())
		throw ParseError("field '" + std::string(name) + "' in " + where + " must be an integer", 0, 0);
	return v.get<std::int64_t>();
}

Instance parse_job_list(const json& doc)
{
	reject_unknown_keys(doc, {"jobs", "machines"}, "instance");
	if (!doc.contains("machines"))
		throw ParseError("instance is missing 'machines'", 0, 0);
	if (!doc.at("jobs").is_array())
		throw ParseError("'jobs' must be an array", 0, 0);

	const auto machines = integer_field(doc, "machines", "instance");
	if (machines < 1)
		throw InputError("machines must be >= 1");

	std::vector<Job> jobs;
	std::set<std::int64_t> seen;
	std::int64_t position = 0;
	for (const auto& entry : doc.at("jobs")) {
		++position;
		const std::string where = "job entry " + std::to_string(position);
		if (!entry.is_object())
			throw ParseError(where + " must be an object", 0, 0);
		reject_unknown_keys(entry, {"id", "arrival", "processing"}, where);
		if (!entry.contains("arrival") || !entry.contains("processing"))
			throw ParseError(where + " needs 'arrival' and 'processing'", 0, 0);
		Job j;
		const auto id = entry.contains("id") ? integer_field(entry, "id", where) : position;
		if (!seen.insert(id).second)
			throw InputError("duplicate job id " + std::to_string(id));
		j.id = static_cast<JobId>(id);
		j.arrival = integer_field(entry, "arrival", where);
		j.processing = integer_field(entry, "processing", where);
		if (j.arrival < 0)
			throw InputError(where + ": negative arrival time");
		if (j.processing < 0)
			throw InputError(where + ": negative processing time");
		jobs.push_back(j);
	}
	return Instance(std::move(jobs), static_cast<int>(machines));
}

ClassSpec parse_class(const json& doc)
{
	reject_unknown_keys(doc, {"class", "n", "m", "s3_interpretation", "processing_override"}, "class stanza");
	if (!doc.at("class").is_string())
		throw ParseError("'class' must be a string", 0, 0);
	if (!doc.contains("n"))
		throw ParseError("class stanza is missing 'n'", 0, 0);

	ClassSpec spec;
	spec.class_id = class_from_string(doc.at("class").get<std::string>());
	spec.n = static_cast<int>(integer_field(doc, "n", "class stanza"));
	if (doc.contains("m"))
		spec.m = static_cast<int>(integer_field(doc, "m", "class stanza"));
	if (doc.contains("processing_override"))
		spec.processing_override = integer_field(doc, "processing_override", "class stanza");
	if (doc.contains("s3_interpretation")) {
		if (!doc.at("s3_interpretation").is_string())
			throw ParseError("'s3_interpretation' must be a string", 0, 0);
		spec.s3 = s3_interpretation_from_string(doc.at("s3_interpretation").get<std::string>());
	}
	validate(spec);
	return spec;
}

} // namespace

void check_constraints(const Instance& inst)
{
	const auto n = static_cast<Time>(inst.size());
	const Time m = inst.machines();
	if (n < m) {
		throw InputError("SRPT operating constraint n >= m violated: " + std::to_string(n) + " jobs on " +
		                 std::to_string(m) + " machines");
	}
	if (inst.min_processing() < m) {
		throw InputError("SRPT operating constraint t >= m violated: processing time " +
		                 std::to_string(inst.min_processing()) + " with " + std::to_string(m) + " machines");
	}
}

InstanceSource parse_instance(std::string_view text, const ParseOptions& opts)
{
	json doc;
	try {
		doc = json::parse(text.begin(), text.end());
	} catch (const json::parse_error& e) {
		auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
		throw ParseError("malformed instance document", line, col);
	}
	if (!doc.is_object())
		throw ParseError("instance document must be a JSON object", 1, 1);

	const bool has_jobs = doc.contains("jobs");
	const bool has_class = doc.contains("class");
	if (has_jobs == has_class)
		throw ParseError("instance document needs exactly one of 'jobs' or 'class'", 0, 0);

	InstanceSource src = has_jobs ? InstanceSource{parse_job_list(doc)} : InstanceSource{parse_class(doc)};
	if (opts.enforce_constraints)
		check_constraints(materialize(src));
	return src;
}

Instance materialize(const InstanceSource& src)
{
	if (const auto* inst = std::get_if<Instance>(&src))
		return *inst;
	return generate(std::get<ClassSpec>(src));
}

std::string serialize_instance(const Instance& inst)
{
	json jobs = json::array();
	for (const auto& j : inst.jobs())
		jobs.push_back({{"id", j.id}, {"arrival", j.arrival}, {"processing", j.processing}});
	json doc = {{"jobs", jobs}, {"machines", inst.machines()}};
	return doc.dump(2) + "\n";
}

std::string serialize_class(const ClassSpec& spec)
{
	json doc = {{"class", std::string(to_string(spec.class_id))}, {"n", spec.n}};
	if (spec.m)
		doc["m"] = *spec.m;
	if (spec.processing_override)
		doc["processing_override"] = *spec.processing_override;
	if (spec.class_id == ClassId::S3)
		doc["s3_interpretation"] = std::string(to_string(spec.s3));
	return doc.dump(2) + "\n";
}

std::string write_schedule(const Schedule& s)
{
	std::ostringstream os;
	os << "# machines " << s.instance().machines() << '\n';
	for (const auto& j : s.instance().jobs())
		os << "# job " << j.id << " arrival " << j.arrival << " processing " << j.processing << '\n';
	os << "job,machine,start,end\n";
	for (const auto& seg : s.segments())
		os << seg.job << ',' << seg.machine << ',' << seg.start << ',' << seg.end << '\n';
	return os.str();
}

Schedule read_schedule(std::string_view text)
{
	std::istringstream in{std::string(text)};
	std::string line;
	std::size_t lineno = 0;
	int machines = 0;
	std::map<JobId, Job> declared;
	std::vector<Segment> segs;

	while (std::getline(in, line)) {
		++lineno;
		if (!line.empty() && line.back() == '\r')
			line.pop_back();
		if (line.empty())
			continue;
		if (line[0] == '#') {
			std::istringstream ls(line.substr(1));
			std::string word;
			ls >> word;
			if (word == "machines") {
				if (!(ls >> machines))
					throw ParseError("bad machines line", lineno, 1);
			} else if (word == "job") {
				Job j;
				std::string a, p;
				if (!(ls >> j.id >> a >> j.arrival >> p >> j.processing) || a != "arrival" || p != "processing")
					throw ParseError("bad job line", lineno, 1);
				declared[j.id] = j;
			}
			continue;
		}
		if (line == "job,machine,start,end")
			continue;
		Segment seg;
		char c1 = 0, c2 = 0, c3 = 0;
		std::istringstream ls(line);
		if (!(ls >> seg.job >> c1 >> seg.machine >> c2 >> seg.start >> c3 >> seg.end) || c1 != ',' || c2 != ',' ||
		    c3 != ',')
			throw ParseError("expected job,machine,start,end", lineno, 1);
		std::string rest;
		if (ls >> rest)
			throw ParseError("trailing data after segment", lineno, 1);
		segs.push_back(seg);
	}

	if (declared.empty()) {
		// bare segment list: infer each job from its segments
		for (const auto& s : segs) {
			auto [it, fresh] = declared.try_emplace(s.job, Job{s.job, s.start, 0});
			it->second.arrival = std::min(it->second.arrival, s.start);
			it->second.processing += s.end - s.start;
		}
	}
	if (machines == 0)
		for (const auto& s : segs)
			machines = std::max(machines, static_cast<int>(s.machine));

	std::vector<Job> jobs;
	for (const auto& [id, j] : declared)
		jobs.push_back(j);
	return Schedule(Instance(std::move(jobs), machines), std::move(segs));
}

ReportFormat report_format_from_string(std::string_view s)
{
	if (s == "text")
		return ReportFormat::text;
	if (s == "csv")
		return ReportFormat::csv;
	throw InputError("unknown report format '" + std::string(s) + "' (expected text or csv)");
}

namespace {

const std::vector<std::string> report_columns = {
	"theorem",        "n",
	"policy",         "w_srpt_measured",
	"w_srpt_claimed", "w_opt_measured",
	"w_opt_claimed",  "cr_measured_num",
	"cr_measured_den", "cr_claimed_num",
	"cr_claimed_den", "verdict",
};

std::vector<std::string> cells(const std::string& label, const TheoremRow& r)
{
	return {label,
	        std::to_string(r.n),
	        std::string(to_string(r.policy)),
	        std::to_string(r.srpt_measured),
	        std::to_string(r.srpt_claimed),
	        std::to_string(r.opt_measured),
	        std::to_string(r.opt_claimed),
	        std::to_string(r.cr_measured.num()),
	        std::to_string(r.cr_measured.den()),
	        std::to_string(r.cr_claimed.num()),
	        std::to_string(r.cr_claimed.den()),
	        std::string(to_string(r.verdict()))};
}

} // namespace

std::string emit_reports(const std::vector<TheoremReport>& reports, ReportFormat format)
{
	std::vector<std::vector<std::string>> table{report_columns};
	for (const auto& rep : reports)
		for (const auto& r : rep.rows)
			table.push_back(cells(rep.label, r));

	std::ostringstream os;
	if (format == ReportFormat::csv) {
		for (const auto& row : table) {
			for (std::size_t i = 0; i < row.size(); ++i)
				os << (i ? "," : "") << row[i];
			os << '\n';
		}
		return os.str();
	}

	std::vector<std::size_t> width(report_columns.size(), 0);
	for (const auto& row : table)
		for (std::size_t i = 0; i < row.size(); ++i)
			width[i] = std::max(width[i], row[i].size());
	for (const auto& row : table) {
		std::string line;
		for (std::size_t i = 0; i < row.size(); ++i) {
			if (i)
				line += "  ";
			line += row[i];
			if (i + 1 < row.size())
				line.append(width[i] - row[i].size(), ' ');
		}
		os << line << '\n';
	}
	return os.str();
}

std::string emit_report(const TheoremReport& report, ReportFormat format)
{
	return emit_reports({report}, format);
}

std::string read_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::string& path, std::string_view contents)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw InputError("cannot write '" + path + "'");
	out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

} // namespace srpt
