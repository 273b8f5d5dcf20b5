#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msrs {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// den may be negative; den == 0 throws std::domain_error
inline Rat rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return den < 0 ? Rat(BigInt(num) * -1, BigInt(den) * -1) : Rat(num, den);
}

inline BigInt num_of(const Rat& r) { return BigInt(boost::multiprecision::numerator(r)); }
inline BigInt den_of(const Rat& r) { return BigInt(boost::multiprecision::denominator(r)); }

BigInt floor_of(const Rat& r);
BigInt ceil_of(const Rat& r);
std::int64_t to_i64(const BigInt& v);

// "n" or "n/d"
std::string to_string(const Rat& r);
// fixed-point rendering, for humans only
std::string to_decimal(const Rat& r, int digits = 6);
double to_double(const Rat& r);

// accepts "n", "n/d", "-n/d" and finite decimals like "0.25"
Rat parse_rat(const std::string& text);

}  // namespace msrs
