#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace srpt {

/// Exact ratio of two integers, always kept in lowest terms with a positive
/// denominator. Competitive ratios are compared with this, never with doubles.
class Rational {
public:
	Rational() = default;
	Rational(std::int64_t numerator, std::int64_t denominator);

	std::int64_t num() const { return num_; }
	std::int64_t den() const { return den_; }

	std::string str() const;
	double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

	friend bool operator==(const Rational&, const Rational&) = default;
	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

	friend Rational operator+(const Rational& a, const Rational& b);
	friend Rational operator-(const Rational& a, const Rational& b);
	friend Rational operator*(const Rational& a, const Rational& b);
	friend Rational operator/(const Rational& a, const Rational& b);

private:
	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
};

// Throws std::invalid_argument on a zero denominator.
Rational rational_of(std::int64_t numerator, std::int64_t denominator);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace srpt
