#include "suitlint/source.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "suitlint/util.hpp"

namespace suitlint {

SourceFile::SourceFile(std::string path, std::string content)
    : path_(std::move(path)), content_(std::move(content)) {
    index_lines();
}

SourceFile SourceFile::load(const std::string& path, const std::string& display_path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure: " + path);
    std::string content = buf.str();
    if (!is_valid_utf8(content))
        throw EncodingError("file is not valid UTF-8: " + path);
    return SourceFile(display_path, std::move(content));
}

void SourceFile::index_lines() {
    line_starts_.clear();
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < content_.size(); ++i) {
        if (content_[i] == '\n') line_starts_.push_back(i + 1);
    }
}

LineCol SourceFile::line_col(std::size_t offset) const {
    offset = std::min(offset, content_.size());
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line_idx = static_cast<std::size_t>(it - line_starts_.begin()) - 1;
    return LineCol{static_cast<int>(line_idx) + 1,
                   static_cast<int>(offset - line_starts_[line_idx]) + 1};
}

std::string Diagnostic::str() const {
    std::string out = file;
    out += ":";
    out += std::to_string(line);
    out += severity == Severity::error ? ": error: " : ": warning: ";
    out += message;
    return out;
}

}  // namespace suitlint
