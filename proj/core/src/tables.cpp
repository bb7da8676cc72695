#include "ratvec/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ratvec/poly_tables_data.hpp"

namespace ratvec {

std::map<std::string, TermList> parse_poly_tables(const std::string& text) {
  std::map<std::string, TermList> out;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    if (line[first] == '[') {
      auto close = line.find(']', first);
      if (close == std::string::npos)
        throw std::runtime_error("poly_tables: unterminated section at line " + std::to_string(lineno));
      section = line.substr(first + 1, close - first - 1);
      continue;
    }
    if (section.empty())
      throw std::runtime_error("poly_tables: entry before any section at line " + std::to_string(lineno));
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("poly_tables: missing ':' at line " + std::to_string(lineno));
    std::istringstream head(line.substr(0, colon));
    TableTerm term;
    for (int i = 0; i < 5; ++i) {
      if (!(head >> term.exps[i]) || term.exps[i] < 0)
        throw std::runtime_error("poly_tables: bad exponents at line " + std::to_string(lineno));
    }
    std::string coeff_text = line.substr(colon + 1);
    coeff_text.erase(std::remove_if(coeff_text.begin(), coeff_text.end(),
                                    [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
                     coeff_text.end());
    term.coeff = Rational::parse(coeff_text);
    if (term.coeff.is_zero())
      throw std::runtime_error("poly_tables: zero coefficient at line " + std::to_string(lineno));
    out[section].push_back(term);
  }
  return out;
}

const std::map<std::string, TermList>& poly_tables() {
  static const std::map<std::string, TermList> tables =
      parse_poly_tables(kPolyTablesText);
  return tables;
}

const TermList& table(const std::string& name) {
  const auto& tables = poly_tables();
  auto it = tables.find(name);
  if (it == tables.end()) throw std::out_of_range("unknown polynomial table: " + name);
  return it->second;
}

}  // namespace ratvec
