#include "srptlab/workload.hpp"

#include <string>

namespace srpt {

std::string_view to_string(ClassId c)
{
	switch (c) {
	case ClassId::S1:
		return "S1";
	case ClassId::S2:
		return "S2";
	case ClassId::S3:
		return "S3";
	case ClassId::S4:
		return "S4";
	case ClassId::S5:
		return "S5";
	case ClassId::parametric:
		return "parametric";
	}
	return "?";
}

ClassId class_from_string(std::string_view s)
{
	for (auto c : {ClassId::S1, ClassId::S2, ClassId::S3, ClassId::S4, ClassId::S5, ClassId::parametric})
		if (to_string(c) == s)
			return c;
	throw InputError("unknown class '" + std::string(s) + "' (expected S1..S5 or parametric)");
}

std::string_view to_string(S3Interpretation i)
{
	return i == S3Interpretation::literal_2n ? "literal-2n" : "theorem-n-plus-2";
}

S3Interpretation s3_interpretation_from_string(std::string_view s)
{
	if (s == "literal-2n")
		return S3Interpretation::literal_2n;
	if (s == "theorem-n-plus-2")
		return S3Interpretation::theorem_n_plus_2;
	throw InputError("unknown S3 interpretation '" + std::string(s) +
	                 "' (expected literal-2n or theorem-n-plus-2)");
}

void validate(const ClassSpec& spec)
{
	if (spec.n < 1)
		throw InputError("class parameter n must be >= 1");
	if (spec.m && *spec.m < 1)
		throw InputError("machine count m must be >= 1");
	if (spec.processing_override && spec.class_id != ClassId::parametric)
		throw InputError("processing_override is only valid for the parametric class");
	if (spec.processing_override && *spec.processing_override < 1)
		throw InputError("processing_override must be >= 1");
	if (!spec.m && (spec.class_id == ClassId::S1 || spec.class_id == ClassId::parametric))
		throw InputError(std::string(to_string(spec.class_id)) + " needs an explicit machine count m");
}

int job_count(const ClassSpec& spec)
{
	switch (spec.class_id) {
	case ClassId::S4:
	case ClassId::S5:
		return 2 * spec.n;
	default:
		return spec.n;
	}
}

Time processing_time(const ClassSpec& spec)
{
	const Time n = spec.n;
	switch (spec.class_id) {
	case ClassId::S1:
	case ClassId::S4:
		return n;
	case ClassId::S2:
		return n + 1;
	case ClassId::S3:
		return spec.s3 == S3Interpretation::literal_2n ? 2 * n : n + 2;
	case ClassId::S5:
		return 2 * n;
	case ClassId::parametric:
		return spec.processing_override.value_or(n);
	}
	return n;
}

int machine_count(const ClassSpec& spec)
{
	return spec.m.value_or(spec.n);
}

Instance generate(const ClassSpec& spec)
{
	validate(spec);
	const int count = job_count(spec);
	const Time p = processing_time(spec);
	std::vector<Job> jobs;
	jobs.reserve(static_cast<std::size_t>(count));
	for (int i = 1; i <= count; ++i)
		jobs.push_back({i, i - 1, p});
	return Instance(std::move(jobs), machine_count(spec));
}

} // namespace srpt
