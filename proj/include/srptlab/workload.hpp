#pragma once

#include <optional>
#include <string_view>

#include "srptlab/model.hpp"

namespace srpt {

enum class ClassId { S1, S2, S3, S4, S5, parametric };

// Class S3 as literally defined uses p = 2n; the numbers stated for its
// competitive ratio only fit p = n + 2.
enum class S3Interpretation { literal_2n, theorem_n_plus_2 };

std::string_view to_string(ClassId c);
ClassId class_from_string(std::string_view s);
std::string_view to_string(S3Interpretation i);
S3Interpretation s3_interpretation_from_string(std::string_view s);

struct ClassSpec {
	ClassId class_id = ClassId::S1;
	int n = 1;
	// required for S1 and parametric; defaults to n for S2..S5
	std::optional<int> m;
	// parametric only; defaults to n
	std::optional<Time> processing_override;
	S3Interpretation s3 = S3Interpretation::literal_2n;

	friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

// Throws InputError when the spec is malformed.
void validate(const ClassSpec& spec);

int job_count(const ClassSpec& spec);
Time processing_time(const ClassSpec& spec);
int machine_count(const ClassSpec& spec);

/// Builds the job sequence of a class: J_i arrives at i-1 and all jobs have
/// the class processing time.
Instance generate(const ClassSpec& spec);

} // namespace srpt
