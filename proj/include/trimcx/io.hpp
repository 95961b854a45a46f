#pragma once

#include "trimcx/graded.hpp"
#include "trimcx/ideal.hpp"
#include "trimcx/pfaffian.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace trimcx {

// Ideal files:
//     char 32003
//     x^2 - y*z
//     ...
// Skew matrix files:
//     char 32003
//     skew 3
//     0, z, -y
//     -z, 0, x
//     y, -x, 0
// Blank lines and lines starting with '#' are ignored.

/// Reads the header, switches the field characteristic to it and parses the
/// generators. Throws InputError on malformed input.
Ideal read_ideal(std::istream& in);
Ideal read_ideal_file(const std::string& path);

void write_ideal(std::ostream& out, const Ideal& ideal);
void write_ideal_file(const std::string& path, const Ideal& ideal);

SkewMatrix read_skew(std::istream& in);
void write_skew(std::ostream& out, const SkewMatrix& m);

nlohmann::json to_json(const BettiTable& b);
nlohmann::json to_json(const Ideal& ideal);

} // namespace trimcx
