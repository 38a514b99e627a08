#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace ghsd {

// Exact rational scalar used throughout the library.
using Q = boost::multiprecision::mpq_rational;
using Z = boost::multiprecision::mpz_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepted grammar: -?[0-9]+(/[1-9][0-9]*)?  (no whitespace, no leading '+').
Q parse_rational(const std::string& s);

// Canonical form: "p" for integers, "p/q" with q > 1 otherwise, sign on the numerator.
std::string format_rational(const Q& q);

// Round-trip float formatting with 17 significant digits.
std::string format_double17(double x);

double to_double(const Q& q);

Q q_pow(const Q& base, long long e);

Q factorial(long long n);

Q binomial(long long n, long long k);

}  // namespace ghsd
