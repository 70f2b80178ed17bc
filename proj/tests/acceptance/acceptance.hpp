#pragma once

#include <cstdint>
#include <sstream>
#include <string>

namespace cubext::acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Counts failures and keeps the first few messages.
class Tally {
 public:
  void fail(const std::string& what) {
    if (++failures_ <= 5) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks, " << failures_ << " failures";
    if (failures_) os << " [" << first_ << "]";
    return {failures_ == 0, os.str()};
  }

 private:
  std::uint64_t checks_ = 0, failures_ = 0;
  std::string first_;
};

Outcome criterion1();
Outcome criterion2();
Outcome criterion3();
Outcome criterion4();
Outcome criterion5();
Outcome criterion6();
Outcome criterion7();
Outcome criterion8();
Outcome criterion9();
Outcome criterion10(bool write_goldens);

}  // namespace cubext::acceptance
