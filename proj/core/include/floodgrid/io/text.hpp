#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace floodgrid::io {

// Shortest decimal that parses back to exactly `v`.
std::string format_number(double v);

// Fixed two-decimal rendering used for dollars and percentages. Never
// prints "-0.00".
std::string format_fixed2(double v);

// Strict full-token parse; returns false on trailing garbage, empty input or
// non-finite results.
bool parse_double(std::string_view token, double &out);

std::string read_text_file(const std::filesystem::path &path);

// Writes every (name, content) pair under `dir` through temporary files that
// are renamed into place only after all of them were written successfully.
void write_files_atomically(const std::filesystem::path &dir,
                            const std::vector<std::pair<std::string, std::string>> &files);

} // namespace floodgrid::io
