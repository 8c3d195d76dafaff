#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diffdef/series.hpp"

namespace diffdef {

inline constexpr const char* kDemoSchema = "diffdef.demo/1";

/// Golden expectations, one "key: polynomial" per line, '#' starts a comment.
/// Keys are <example>.input, <example>.item<k> or <example>.terminal; polynomials are in x, y-chain form.
using Golden = std::map<std::string, std::string>;
Golden read_golden(std::istream& in);

/// a = c*b for some nonzero c in Q(t).
bool proportional(const DiffPoly& a, const DiffPoly& b);

struct DemoCheck {
  std::string key;
  std::string expected;
  std::string actual;
  bool match = false;
};

struct DemoTranscript {
  nlohmann::json examples = nlohmann::json::array();
  std::vector<DemoCheck> checks;
  bool verified = true;

  bool ok() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Runs the two worked examples (curve "(y' - x'')*x' = 0" and multi "x*u1 + u2 = 0"),
/// verifies both traces and checks every golden key.
DemoTranscript run_demo(const Golden& golden, const ModelConfig& cfg, unsigned samples);

}  // namespace diffdef
