#include "fsys/report.hpp"

#include <cmath>
#include <cstdio>

namespace fsys {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::warning:
      return "warning";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::partial:
      return "partial";
  }
  return "?";
}

std::string approx_string(const CycNumber& x) {
  const auto z = embed_complex(x);
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  char buf[96];
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%.12g", re);
  else
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  return buf;
}

void CheckResult::value(std::string key, const CycNumber& x) {
  values.push_back({std::move(key), x.to_string(), approx_string(x)});
}

}  // namespace fsys
