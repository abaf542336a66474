#ifndef GENSPECT_SRC_TEXT_UTIL_H_
#define GENSPECT_SRC_TEXT_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace genspect::internal {

std::string_view Trim(std::string_view s);
std::vector<std::string_view> Split(std::string_view s, char sep);
// Splits on runs of spaces and tabs; no empty fields.
std::vector<std::string_view> SplitWhitespace(std::string_view s);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// Reads the whole file; throws Error(kMissingFile) when it cannot be opened.
std::string ReadFile(const std::filesystem::path& path);
// Splits on LF, dropping one trailing CR per line and a final empty line.
std::vector<std::string> Lines(std::string_view text);

bool ParseSize(std::string_view s, std::size_t& out);

}  // namespace genspect::internal

#endif  // GENSPECT_SRC_TEXT_UTIL_H_
