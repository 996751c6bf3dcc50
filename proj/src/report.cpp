#include "splitconf/report.hpp"

#include <algorithm>

namespace splitconf {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Discrepancy:
      return "discrepancy-documented";
  }
  return "unknown";
}

void Report::add(CheckEntry e) {
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), e.id,
                              [](const std::string& id, const CheckEntry& x) { return id < x.id; });
  entries_.insert(pos, std::move(e));
}

void Report::add(std::string id, bool ok, std::string expected, std::string actual,
                 std::string context) {
  add(CheckEntry{std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected),
                 std::move(actual), std::move(context)});
}

void Report::merge(const Report& other) {
  for (const auto& e : other.entries_) add(e);
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const auto& e) { return e.status == s; }));
}

const CheckEntry* Report::find(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace splitconf
