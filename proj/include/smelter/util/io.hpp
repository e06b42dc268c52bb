#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace smelter::io {

std::string read_file(const std::filesystem::path& path);

// Write via a sibling temp file and rename, so readers never observe a
// partially written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

std::vector<std::string> split_lines(const std::string& text);

// All .java files under `root` (or `root` itself when it is a file),
// sorted lexicographically for reproducible traversal order.
std::vector<std::filesystem::path> collect_java_files(const std::filesystem::path& root);

}  // namespace smelter::io
