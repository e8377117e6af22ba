#include "metafusion/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace metafusion {

void SweepReport::add_row(std::vector<std::string> row, bool pass) {
  rows.push_back(std::move(row));
  if (pass) ++pass_count;
  else ++fail_count;
}

void SweepReport::note(std::string key, std::string value) {
  summary.emplace_back(std::move(key), std::move(value));
}

std::string SweepReport::to_tsv() const {
  std::ostringstream os;
  os << "# check=" << check << " max_order=" << max_order
     << " version=" << version << "\n";
  for (size_t i = 0; i < columns.size(); ++i)
    os << (i ? "\t" : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
    os << "\n";
  }
  return os.str();
}

std::string SweepReport::to_json_string() const {
  nlohmann::json j;
  j["check"] = check;
  j["max_order"] = max_order;
  j["version"] = version;
  j["pass_count"] = pass_count;
  j["fail_count"] = fail_count;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::object();
    for (size_t i = 0; i < columns.size() && i < row.size(); ++i)
      r[columns[i]] = row[i];
    rows_json.push_back(std::move(r));
  }
  j["rows"] = std::move(rows_json);
  nlohmann::json s = nlohmann::json::object();
  for (const auto& [k, v] : summary) s[k] = v;
  j["summary"] = std::move(s);
  return j.dump(2);
}

std::string SweepReport::to_text() const {
  std::vector<size_t> width(columns.size());
  for (size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  os << "check " << check << " (max order " << max_order << ", v" << version << ")\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size())
        os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << "\n";
  };
  line(columns);
  for (const auto& row : rows) line(row);
  for (const auto& [k, v] : summary) os << k << ": " << v << "\n";
  os << "pass " << pass_count << ", fail " << fail_count << "\n";
  return os.str();
}

}  // namespace metafusion
