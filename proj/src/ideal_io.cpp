#include "furst/ideal_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace furst {

std::pair<std::uint32_t, std::uint32_t> parse_field_spec(const std::string& spec) {
  std::size_t caret = spec.find('^');
  auto parse_num = [&](const std::string& s) {
    if (s.empty()) throw ParseError("empty number in field spec", 0);
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad field spec '" + spec + "'", 0);
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  if (caret == std::string::npos) return {parse_num(spec), 1};
  return {parse_num(spec.substr(0, caret)), parse_num(spec.substr(caret + 1))};
}

namespace {
std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}
}  // namespace

Ideal read_ideal(std::istream& in) {
  std::string line;
  std::optional<Field> field;
  std::vector<std::string> vars;
  std::vector<std::string> gen_lines;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("field:", 0) == 0) {
      auto [p, e] = parse_field_spec(trim(line.substr(6)));
      field = Field::create(p, e);
      continue;
    }
    if (line.rfind("vars:", 0) == 0) {
      std::stringstream ss(trim(line.substr(5)));
      std::string name;
      while (std::getline(ss, name, ',')) {
        name = trim(name);
        if (!name.empty()) vars.push_back(name);
      }
      continue;
    }
    gen_lines.push_back(line);
  }
  if (!field) throw ParseError("ideal file missing 'field:' header", 0);
  if (vars.empty()) throw ParseError("ideal file missing 'vars:' header", 0);
  Ring ring(*field, vars);
  std::vector<Polynomial> gens;
  for (const auto& g : gen_lines) gens.push_back(poly_parse(g, ring));
  return Ideal(ring, std::move(gens));
}

Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file: " + path);
  return read_ideal(in);
}

void write_ideal(std::ostream& out, const Ideal& ideal) {
  const Field& F = ideal.ring.field();
  out << "field: " << F.p();
  if (F.e() > 1) out << "^" << F.e();
  out << "\n";
  out << "vars: ";
  for (std::size_t i = 0; i < ideal.ring.names().size(); ++i) {
    if (i) out << ",";
    out << ideal.ring.names()[i];
  }
  out << "\n";
  for (const Polynomial& g : ideal.gens) out << poly_print(g) << "\n";
}

void write_ideal_file(const std::string& path, const Ideal& ideal) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  write_ideal(out, ideal);
}

}  // namespace furst
