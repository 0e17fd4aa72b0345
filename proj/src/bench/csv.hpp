#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pld::bench {

// Minimal CSV writer with deterministic number formatting (17 significant
// digits), so reruns are byte-identical.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns) : out_(path) {
    if (!out_) throw std::runtime_error("csv: cannot open " + path);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out_ << ',';
      out_ << columns[i];
    }
    out_ << '\n';
    cols_ = columns.size();
  }

  CsvWriter& field(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return raw(os.str());
  }
  CsvWriter& field(int v) { return raw(std::to_string(v)); }
  CsvWriter& field(std::uint64_t v) { return raw(std::to_string(v)); }
  CsvWriter& field(bool v) { return raw(v ? "1" : "0"); }
  CsvWriter& field(const std::string& v) { return raw(v); }

  void end_row() {
    if (count_ != cols_) throw std::logic_error("csv: row width mismatch");
    out_ << '\n';
    count_ = 0;
  }

 private:
  CsvWriter& raw(const std::string& s) {
    if (count_) out_ << ',';
    out_ << s;
    ++count_;
    return *this;
  }

  std::ofstream out_;
  std::size_t cols_ = 0;
  std::size_t count_ = 0;
};

}  // namespace pld::bench
