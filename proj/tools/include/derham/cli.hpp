#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "derham/ideal.hpp"
#include "derham/poly.hpp"

namespace derham::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kSingular = 2,
  kInconclusive = 3,
  kBudget = 4,
  kInvalid = 5,
};

// A variety as read from input: generators and optionally a fixed family of
// hyperplanes (used by the hyperplanes and complement commands).
struct VarietyInput {
  Variety variety;
  std::vector<Poly> hyperplanes;
  std::string name;
};

struct JobSpec {
  std::string command;  // smooth, betti, hyperplanes, complement
  VarietyInput input;
  std::optional<int> pole_order;
  long seed = 1;
  std::size_t budget = 64;
  std::vector<int> tuple;  // complement only
  bool json = false;
};

struct CatalogEntry {
  std::string name;
  int n = 0;
  std::vector<std::string> generators;
  // Empty for singular entries.
  std::vector<std::size_t> expected_betti;
  std::optional<long> expected_euler;
  bool smooth = true;
  std::string note;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);
VarietyInput catalog_input(const CatalogEntry& entry);

// Parses a polynomial in X0..Xn. Throws ParseError.
Poly parse_polynomial(const std::string& text, int n);

// {"n": int, "generators": [string...], "hyperplanes": [string...]?}
VarietyInput parse_input_json(const std::string& text);
VarietyInput load_input_file(const std::string& path);

// Checks n >= 1, homogeneity, and linearity of given hyperplanes.
void validate_input(const VarietyInput& input);

// Runs one job, writing the report to out and diagnostics to err.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace derham::cli
