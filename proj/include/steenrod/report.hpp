#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

/// Grammar a witness string is written in.
enum class WitnessKind { none, steenrod, ring };

struct ReportEntry {
  std::string check;
  std::string params;
  CheckStatus status = CheckStatus::skipped;
  std::string witness;
  double elapsed_ms = 0.0;

  WitnessKind witness_kind = WitnessKind::none;
  /// Ring the witness lives in, for WitnessKind::ring.
  std::shared_ptr<const RingPresentation> witness_ring;
};

class VerificationReport {
 public:
  const std::vector<ReportEntry>& entries() const& noexcept { return entries_; }
  std::vector<ReportEntry> entries() && { return std::move(entries_); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }

  void append(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  /// Pass iff every non-skipped entry passes.
  bool passed() const {
    for (const auto& e : entries_)
      if (e.status == CheckStatus::fail) return false;
    return true;
  }

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.status == s;
    return n;
  }

  std::string to_text(bool with_timings = true) const {
    std::size_t wc = 5, wp = 6;
    for (const auto& e : entries_) {
      wc = std::max(wc, e.check.size());
      wp = std::max(wp, e.params.size());
    }
    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    out << pad("check", wc) << "  " << pad("params", wp) << "  status   ";
    if (with_timings) out << "    ms  ";
    out << "witness\n";
    for (const auto& e : entries_) {
      out << pad(e.check, wc) << "  " << pad(e.params, wp) << "  " << pad(to_string(e.status), 7) << "  ";
      if (with_timings) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%8.2f", e.elapsed_ms);
        out << buf << "  ";
      }
      out << e.witness << '\n';
    }
    out << "overall: " << (passed() ? "pass" : "fail") << " (" << count(CheckStatus::pass) << " pass, "
        << count(CheckStatus::fail) << " fail, " << count(CheckStatus::skipped) << " skipped)\n";
    return out.str();
  }

  /// One JSON object per line with fields check, params, status, witness,
  /// elapsed_ms.
  std::string to_json_lines() const {
    std::string out;
    for (const auto& e : entries_) {
      nlohmann::ordered_json j;
      j["check"] = e.check;
      j["params"] = e.params;
      j["status"] = to_string(e.status);
      j["witness"] = e.witness;
      j["elapsed_ms"] = e.elapsed_ms;
      out += j.dump();
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<ReportEntry> entries_;
};

/// Runs body() -> bool while timing it, filling status and elapsed_ms.
template <typename Body>
ReportEntry timed_entry(std::string check, std::string params, Body&& body) {
  ReportEntry entry;
  entry.check = std::move(check);
  entry.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  const bool ok = body(entry);
  const auto stop = std::chrono::steady_clock::now();
  entry.status = ok ? CheckStatus::pass : CheckStatus::fail;
  entry.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return entry;
}

}  // namespace steenrod
