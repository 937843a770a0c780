#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "hyperplate/cli.hpp"

namespace hyperplate::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void render(const Table& t, Format f, std::ostream& out) {
  switch (f) {
    case Format::Csv: {
      for (size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << t.columns[j];
      out << '\n';
      for (const auto& row : t.rows) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
        out << '\n';
      }
      break;
    }
    case Format::Json: {
      auto record = [&](const std::vector<std::string>& row) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (size_t j = 0; j < t.columns.size(); ++j) o[t.columns[j]] = row[j];
        return o;
      };
      nlohmann::ordered_json doc;
      if (t.single_record && t.rows.size() == 1) {
        doc = record(t.rows[0]);
      } else {
        doc = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) doc.push_back(record(row));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Text: {
      std::vector<size_t> width(t.columns.size());
      for (size_t j = 0; j < t.columns.size(); ++j) {
        width[j] = t.columns[j].size();
        for (const auto& row : t.rows) width[j] = std::max(width[j], row[j].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (size_t j = 0; j < cells.size(); ++j) {
          out << (j ? "  " : "") << cells[j];
          if (j + 1 < cells.size()) out << std::string(width[j] - cells[j].size(), ' ');
        }
        out << '\n';
      };
      line(t.columns);
      for (const auto& row : t.rows) line(row);
      break;
    }
  }
}

}  // namespace hyperplate::cli
