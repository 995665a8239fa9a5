#include "gorcol/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gorcol {

void Report::value(const std::string& key, const std::string& v) {
  Entry e;
  e.kind = Entry::Kind::Text;
  e.key = key;
  e.text = v;
  entries_.push_back(std::move(e));
}

void Report::value(const std::string& key, long long v) {
  Entry e;
  e.kind = Entry::Kind::Number;
  e.key = key;
  e.num = v;
  entries_.push_back(std::move(e));
}

void Report::value(const std::string& key, std::size_t v) {
  value(key, static_cast<long long>(v));
}

void Report::flag(const std::string& key, bool v) {
  Entry e;
  e.kind = Entry::Kind::Flag;
  e.key = key;
  e.bit = v;
  entries_.push_back(std::move(e));
}

void Report::sequence(const std::string& key, const std::vector<long long>& v) {
  Entry e;
  e.kind = Entry::Kind::Sequence;
  e.key = key;
  e.seq = v;
  entries_.push_back(std::move(e));
}

void Report::hilbert_table(
    const std::vector<std::pair<std::string, std::vector<long long>>>& rows) {
  Entry e;
  e.kind = Entry::Kind::Table;
  e.table = rows;
  entries_.push_back(std::move(e));
}

void Report::check(const std::string& anchor, bool pass, const std::string& detail) {
  Entry e;
  e.kind = Entry::Kind::Check;
  e.check_index = checks_.size();
  entries_.push_back(std::move(e));
  checks_.push_back({anchor, pass, detail});
}

bool Report::all_pass() const { return failed_count() == 0; }

std::size_t Report::failed_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (!c.pass) ++n;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command_ << "\n";
  for (const auto& e : entries_) {
    switch (e.kind) {
      case Entry::Kind::Text:
        os << e.key << ": " << e.text << "\n";
        break;
      case Entry::Kind::Number:
        os << e.key << ": " << e.num << "\n";
        break;
      case Entry::Kind::Flag:
        os << e.key << ": " << (e.bit ? "true" : "false") << "\n";
        break;
      case Entry::Kind::Sequence: {
        os << e.key << ": ";
        for (std::size_t i = 0; i < e.seq.size(); ++i) os << (i ? "," : "") << e.seq[i];
        os << "\n";
        break;
      }
      case Entry::Kind::Table: {
        std::size_t width = 0;
        std::size_t label_w = std::string("degree i").size();
        for (const auto& [label, row] : e.table) {
          width = std::max(width, row.size());
          label_w = std::max(label_w, label.size());
        }
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header;
        for (std::size_t i = 0; i < width; ++i) header.push_back(std::to_string(i));
        cells.push_back(header);
        for (const auto& [label, row] : e.table) {
          std::vector<std::string> line;
          for (std::size_t i = 0; i < width; ++i)
            line.push_back(i < row.size() ? std::to_string(row[i]) : "0");
          cells.push_back(line);
        }
        std::vector<std::size_t> colw(width, 1);
        for (const auto& line : cells)
          for (std::size_t i = 0; i < width; ++i) colw[i] = std::max(colw[i], line[i].size());
        auto emit = [&](const std::string& label, const std::vector<std::string>& line) {
          os << std::left << std::setw(static_cast<int>(label_w)) << label << " |";
          for (std::size_t i = 0; i < width; ++i)
            os << " " << std::right << std::setw(static_cast<int>(colw[i])) << line[i];
          os << "\n";
        };
        emit("degree i", cells[0]);
        for (std::size_t r = 0; r < e.table.size(); ++r) emit(e.table[r].first, cells[r + 1]);
        break;
      }
      case Entry::Kind::Check: {
        const CheckItem& c = checks_[e.check_index];
        os << "check [" << c.anchor << "]: " << (c.pass ? "pass" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
        break;
      }
    }
  }
  if (elapsed_ms_) os << "elapsed_ms: " << std::fixed << std::setprecision(1) << *elapsed_ms_ << "\n";
  if (!checks_.empty()) {
    os << "result: " << (all_pass() ? "PASS" : "FAIL") << " (" << (checks_.size() - failed_count())
       << "/" << checks_.size() << " checks)\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  nlohmann::ordered_json tables = nlohmann::ordered_json::array();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    switch (e.kind) {
      case Entry::Kind::Text:
        values[e.key] = e.text;
        break;
      case Entry::Kind::Number:
        values[e.key] = e.num;
        break;
      case Entry::Kind::Flag:
        values[e.key] = e.bit;
        break;
      case Entry::Kind::Sequence:
        values[e.key] = e.seq;
        break;
      case Entry::Kind::Table: {
        nlohmann::ordered_json t = nlohmann::ordered_json::object();
        for (const auto& [label, row] : e.table) t[label] = row;
        tables.push_back(t);
        break;
      }
      case Entry::Kind::Check: {
        const CheckItem& c = checks_[e.check_index];
        nlohmann::ordered_json jc;
        jc["anchor"] = c.anchor;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
        break;
      }
    }
  }
  j["values"] = values;
  if (!tables.empty()) j["tables"] = tables;
  j["checks"] = checks;
  j["pass"] = all_pass();
  if (elapsed_ms_) j["elapsed_ms"] = *elapsed_ms_;
  return j.dump(2) + "\n";
}

}  // namespace gorcol
