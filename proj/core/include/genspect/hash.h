#ifndef GENSPECT_HASH_H_
#define GENSPECT_HASH_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace genspect {

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view bytes);
std::string FileSha256Hex(const std::filesystem::path& path);

}  // namespace genspect

#endif  // GENSPECT_HASH_H_
