#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gorcol {

struct CheckItem {
  std::string anchor;  // the identity being asserted, e.g. "trace(T/m^n) == m^(n-1)"
  bool pass = false;
  std::string detail;
};

/// Ordered, deterministic report: command echo, computed values, aligned
/// tables (Hilbert rows), and named assertion outcomes. Rendering is
/// byte-stable for fixed inputs; wall time is attached only on request.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void value(const std::string& key, const std::string& v);
  void value(const std::string& key, long long v);
  void value(const std::string& key, std::size_t v);
  void flag(const std::string& key, bool v);
  void sequence(const std::string& key, const std::vector<long long>& v);

  /// Table with a leading degree header row running 0..width-1; each row
  /// is padded with zeros up to the width.
  void hilbert_table(const std::vector<std::pair<std::string, std::vector<long long>>>& rows);

  void check(const std::string& anchor, bool pass, const std::string& detail = "");

  bool all_pass() const;
  std::size_t failed_count() const;
  const std::vector<CheckItem>& checks() const { return checks_; }

  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

  std::string to_text() const;
  std::string to_json() const;

 private:
  struct Entry {
    enum class Kind { Text, Number, Flag, Sequence, Table, Check } kind;
    std::string key;
    std::string text;
    long long num = 0;
    bool bit = false;
    std::vector<long long> seq;
    std::vector<std::pair<std::string, std::vector<long long>>> table;
    std::size_t check_index = 0;
  };

  std::string command_;
  std::vector<Entry> entries_;
  std::vector<CheckItem> checks_;
  std::optional<double> elapsed_ms_;
};

}  // namespace gorcol
