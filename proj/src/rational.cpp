#include "srptlab/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace srpt {

namespace {

using wide = __int128;

Rational from_wide(wide n, wide d)
{
	if (d == 0)
		throw std::invalid_argument("rational: zero denominator");
	if (d < 0) {
		n = -n;
		d = -d;
	}
	wide a = n < 0 ? -n : n;
	wide b = d;
	while (b != 0) {
		wide t = a % b;
		a = b;
		b = t;
	}
	if (a > 1) {
		n /= a;
		d /= a;
	}
	constexpr wide lim = INT64_MAX;
	if (n > lim || n < -lim || d > lim)
		throw std::overflow_error("rational: result out of 64-bit range");
	return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
	if (denominator == 0)
		throw std::invalid_argument("rational: zero denominator");
	if (denominator < 0) {
		numerator = -numerator;
		denominator = -denominator;
	}
	auto g = std::gcd(numerator, denominator);
	num_ = numerator / g;
	den_ = denominator / g;
}

std::string Rational::str() const
{
	return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
	return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
}

Rational operator+(const Rational& a, const Rational& b)
{
	return from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
	                 static_cast<wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
	return from_wide(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
	                 static_cast<wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
	return from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
	return from_wide(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
}

Rational rational_of(std::int64_t numerator, std::int64_t denominator)
{
	return Rational(numerator, denominator);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
	return os << r.str();
}

} // namespace srpt
