#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dlorder {

// Shortest form that reads back to the same double.
std::string formatDouble(double v);
double parseDouble(std::string_view s);
long long parseInteger(std::string_view s);

// Lines without terminators; a trailing empty line and '\r' are dropped.
std::vector<std::string_view> splitLines(std::string_view text);
std::vector<std::string_view> splitFields(std::string_view line, char sep = ',');

// Rejects values that would break an unquoted CSV cell.
void checkCsvField(std::string_view field);

std::string readTextFile(const std::filesystem::path& path);
void writeTextFile(const std::filesystem::path& path, std::string_view content);

}  // namespace dlorder
