#include "smelter/util/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "smelter/util/errors.hpp"

namespace smelter::io {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::string out;
    in.seekg(0, std::ios::end);
    auto n = in.tellg();
    if (n < 0) throw IoError("cannot stat file: " + path.string());
    out.resize(static_cast<std::size_t>(n));
    in.seekg(0, std::ios::beg);
    if (n > 0) in.read(out.data(), n);
    if (!in.good() && !in.eof()) throw IoError("read failed: " + path.string());
    return out;
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for write: " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out.good()) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("rename failed for: " + path.string());
    }
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            std::string line = text.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (i != text.size() || !line.empty()) lines.push_back(std::move(line));
            start = i + 1;
        }
    }
    return lines;
}

std::vector<fs::path> collect_java_files(const fs::path& root) {
    std::vector<fs::path> files;
    if (fs::is_regular_file(root)) {
        files.push_back(root);
    } else if (fs::is_directory(root)) {
        for (const auto& entry : fs::recursive_directory_iterator(root)) {
            if (entry.is_regular_file() && entry.path().extension() == ".java") {
                files.push_back(entry.path());
            }
        }
    } else {
        throw IoError("path does not exist: " + root.string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

}  // namespace smelter::io
