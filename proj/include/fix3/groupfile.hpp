// Line-oriented group files. One grammar, no dialects:
//
//   degree N
//   gen (1 2 3)(4 5)        disjoint 1-indexed cycles, () = identity
//   genimg i1 i2 ... iN     1-indexed image row
//
// Blank lines are permitted. Parse errors carry the line number.
// emit writes `degree` followed by one `gen` line per generator, cycles
// starting at their smallest element and ordered by it, so that
// parse(emit(G)) reproduces the generator tables byte for byte.

#pragma once

#include <istream>
#include <sstream>

#include "group.hpp"

namespace fix3 {

class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline GroupPtr parse_group_stream(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long degree = -1;
  std::vector<Perm> gens;
  auto fail = [&](const std::string& msg) {
    throw parse_error("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "degree") {
      if (degree >= 0) fail("duplicate degree line");
      if (!(ls >> degree) || degree < 1) fail("bad degree");
    } else if (kw == "gen") {
      if (degree < 0) fail("gen before degree");
      std::string rest;
      std::getline(ls, rest);
      std::size_t i = 0;
      auto skip_ws = [&] {
        while (i < rest.size() && rest[i] == ' ') ++i;
      };
      skip_ws();
      std::vector<std::vector<Point>> cycles;
      if (i >= rest.size()) fail("empty gen line");
      while (i < rest.size()) {
        if (rest[i] != '(') fail("expected '('");
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        while (i < rest.size() && rest[i] != ')') {
          std::size_t j = i;
          while (j < rest.size() && rest[j] >= '0' && rest[j] <= '9') ++j;
          if (j == i) fail("expected a point number");
          cyc.push_back(static_cast<Point>(std::stoul(rest.substr(i, j - i))));
          i = j;
          skip_ws();
        }
        if (i >= rest.size()) fail("unterminated cycle");
        ++i;  // ')'
        if (cyc.size() == 1) fail("a cycle needs at least two points");
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
      }
      try {
        gens.push_back(
            Perm::from_cycles(static_cast<Point>(degree), cycles));
      } catch (const structural_error& e) {
        fail(e.what());
      }
    } else if (kw == "genimg") {
      if (degree < 0) fail("genimg before degree");
      std::vector<Point> img;
      long v;
      while (ls >> v) {
        if (v < 1 || v > degree) fail("image out of range");
        img.push_back(static_cast<Point>(v - 1));
      }
      if (static_cast<long>(img.size()) != degree)
        fail("genimg needs exactly degree entries");
      try {
        gens.push_back(Perm::from_images(std::move(img)));
      } catch (const structural_error& e) {
        fail(e.what());
      }
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  ++lineno;
  if (degree < 0) fail("missing degree line");
  if (gens.empty()) fail("no generators");
  return make_group(std::move(gens));
}

inline GroupPtr parse_group_text(const std::string& text) {
  std::istringstream in(text);
  return parse_group_stream(in);
}

inline std::string emit_group(const PermGroup& G) {
  std::string out = "degree " + std::to_string(G.degree()) + "\n";
  for (const Perm& g : G.generators()) out += "gen " + g.cycle_string() + "\n";
  return out;
}

}  // namespace fix3
