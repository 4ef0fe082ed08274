#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace xfc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical text form: reduced "p/q", with the "/q" omitted when q == 1.
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rat rat_from_string(const std::string& s);

double to_double(const Rat& r);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

}  // namespace xfc
