#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srptlab/analysis.hpp"
#include "srptlab/model.hpp"
#include "srptlab/workload.hpp"

namespace srpt {

/// Malformed document. line and column are 1-based; 0 when unknown.
class ParseError : public InputError {
public:
	ParseError(const std::string& what, std::size_t line, std::size_t column);

	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

using InstanceSource = std::variant<Instance, ClassSpec>;

struct ParseOptions {
	// reject instances with n < m or a processing time < m
	bool enforce_constraints = true;
};

// Reads a JSON instance document: either an explicit job list
//   {"jobs": [{"id": 1, "arrival": 0, "processing": 5}], "machines": 1}
// or a class stanza
//   {"class": "S2", "n": 3, "m": 3, "s3_interpretation": "literal-2n"}
InstanceSource parse_instance(std::string_view text, const ParseOptions& opts = {});

// Resolves a parsed source to a concrete instance.
Instance materialize(const InstanceSource& src);

// Throws InputError when the instance breaks n >= m or min processing >= m.
void check_constraints(const Instance& inst);

std::string serialize_instance(const Instance& inst);
std::string serialize_class(const ClassSpec& spec);

// Schedule dump: '#' preamble lines carrying the instance, then CSV rows
// job,machine,start,end.
std::string write_schedule(const Schedule& s);
Schedule read_schedule(std::string_view text);

enum class ReportFormat { text, csv };

ReportFormat report_format_from_string(std::string_view s);

std::string emit_report(const TheoremReport& report, ReportFormat format);
std::string emit_reports(const std::vector<TheoremReport>& reports, ReportFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace srpt
