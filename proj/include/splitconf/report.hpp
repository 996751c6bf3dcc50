#pragma once

#include <string>
#include <utility>
#include <string_view>
#include <vector>

namespace splitconf {

enum class CheckStatus { Pass, Fail, Discrepancy };

std::string_view to_string(CheckStatus s);

struct CheckEntry {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string actual;
  std::string context;
};

/// Outcome of one verification suite. Entries are kept sorted by id so the
/// serialized form does not depend on the order checks ran in.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckEntry>& entries() const { return entries_; }

  void add(CheckEntry e);
  void add(std::string id, bool ok, std::string expected, std::string actual,
           std::string context = {});
  void merge(const Report& other);

  std::size_t count(CheckStatus s) const;
  bool has_failures() const { return count(CheckStatus::Fail) > 0; }
  const CheckEntry* find(std::string_view id) const;

 private:
  std::string suite_;
  std::vector<CheckEntry> entries_;
};

}  // namespace splitconf
