#pragma once

#include <string>

namespace nsring {

enum class OutputFormat { table, json, csv };

/// Parses "table" / "json" / "csv"; throws Error otherwise.
OutputFormat parse_format(const std::string& name);

enum class ColorMode { autodetect, never, always };

/// Reads NSRING_COLOR={auto,never,always}; unset or unknown means auto.
ColorMode color_mode_from_env();

/// Resolves the mode against whether stdout is a terminal.
bool use_color(ColorMode mode);

}  // namespace nsring
