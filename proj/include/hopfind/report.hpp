#ifndef HOPFIND_REPORT_HPP
#define HOPFIND_REPORT_HPP

#include <string>
#include <vector>

namespace hopfind {

/// One named axiom family or identity; a failure carries the first witness found.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

class Report {
 public:
  void pass(std::string name) { checks_.push_back({std::move(name), true, {}}); }
  void fail(std::string name, std::string witness) {
    checks_.push_back({std::move(name), false, std::move(witness)});
  }
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
  }
  /// Appends every check of other, with names prefixed by "prefix.".
  void merge(const std::string& prefix, const Report& other);

  bool ok() const;
  const Check* firstFailure() const;
  const std::vector<Check>& checks() const { return checks_; }
  std::string summary() const;

 private:
  std::vector<Check> checks_;
};

/// Throws VerificationError carrying the first failed check, if any.
void requirePassed(const Report& report, const std::string& context);

}  // namespace hopfind

#endif  // HOPFIND_REPORT_HPP
