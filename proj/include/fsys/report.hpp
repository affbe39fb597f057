#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fsys/cyclotomic.hpp"

namespace fsys {

enum class Status { pass, fail, warning, skipped };

std::string to_string(Status s);

/// Floating-point rendering at zeta = exp(2 pi i / n), display only.
std::string approx_string(const CycNumber& x);

/// Outcome of one family of constraints. Violations are counted over the whole
/// family; the witness is the first violation in the deterministic iteration order.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  size_t instances = 0;
  size_t violations = 0;
  std::string witness;
  std::vector<std::string> notes;
  struct Value {
    std::string key;
    std::string exact;
    /// Floating-point rendering of the exact value, for display only.
    std::string approx;
  };
  /// Exact values worth reporting, e.g. u_a.
  std::vector<Value> values;

  bool ok() const { return status != Status::fail; }
  void fail(std::string first_witness) {
    if (violations == 0) witness = std::move(first_witness);
    ++violations;
    status = Status::fail;
  }
  void value(std::string key, const CycNumber& x);
};

enum class Outcome { pass, fail, partial };

std::string to_string(Outcome o);

struct Report {
  std::string subject;
  Outcome outcome = Outcome::pass;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  void add(CheckResult check) {
    if (check.status == Status::fail) outcome = Outcome::fail;
    checks.push_back(std::move(check));
  }
  bool passed() const { return outcome == Outcome::pass; }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace fsys
