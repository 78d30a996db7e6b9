#include "nsring/output.hpp"

#include <cstdlib>

#include <unistd.h>

#include "nsring/errors.hpp"

namespace nsring {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw Error("unknown format '" + name + "' (expected table, json or csv)");
}

ColorMode color_mode_from_env() {
  const char* v = std::getenv("NSRING_COLOR");
  if (v == nullptr) return ColorMode::autodetect;
  const std::string s(v);
  if (s == "never") return ColorMode::never;
  if (s == "always") return ColorMode::always;
  return ColorMode::autodetect;
}

bool use_color(ColorMode mode) {
  switch (mode) {
    case ColorMode::never:
      return false;
    case ColorMode::always:
      return true;
    case ColorMode::autodetect:
    default:
      return isatty(STDOUT_FILENO) != 0;
  }
}

}  // namespace nsring
