#include "hopfind/report.hpp"

#include <algorithm>
#include <sstream>

#include "hopfind/error.hpp"

namespace hopfind {

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& c : other.checks_) {
    checks_.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.witness});
  }
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::firstFailure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; });
  return it == checks_.end() ? nullptr : &*it;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) os << "  [" << c.witness << "]";
    os << '\n';
  }
  return os.str();
}

void requirePassed(const Report& report, const std::string& context) {
  if (const Check* f = report.firstFailure()) {
    throw VerificationError(context + ": " + f->name, f->witness);
  }
}

}  // namespace hopfind
