#pragma once

#include <filesystem>
#include <string_view>

namespace fnls {

// Writes to a sibling temporary and renames over path, so readers never see
// a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace fnls
