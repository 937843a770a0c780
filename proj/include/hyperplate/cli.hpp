#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperplate::cli {

enum class Format { Json, Csv, Text };

/// Rows of already formatted cells. A single-record table renders as one JSON
/// object instead of an array.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool single_record = false;
};

/// 10 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double x);

void render(const Table& t, Format f, std::ostream& out);

/// Exit codes: 0 ok, 1 usage, 2 domain error, 3 solver error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperplate::cli
