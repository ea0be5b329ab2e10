#pragma once

#include <iosfwd>
#include <string>

#include "furst/gb.hpp"

namespace furst {

/// "5" or "5^2" -> (p, e).
std::pair<std::uint32_t, std::uint32_t> parse_field_spec(const std::string& spec);

/// Ideal file format: UTF-8 text, '#' comments, a header of
///   field: p^e
///   vars: x1,x2,...
/// followed by one generator per line.
Ideal read_ideal(std::istream& in);
Ideal read_ideal_file(const std::string& path);

void write_ideal(std::ostream& out, const Ideal& ideal);
void write_ideal_file(const std::string& path, const Ideal& ideal);

}  // namespace furst
