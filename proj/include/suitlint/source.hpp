#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace suitlint {

// Byte range within one file. Lines/columns are derived lazily from the
// owning SourceFile so the content stays the single source of truth.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool contains(const SourceSpan& other) const {
        return begin <= other.begin && other.end <= end;
    }
    bool empty() const { return begin >= end; }
};

struct LineCol {
    int line = 0;  // 1-based
    int column = 0;
};

class SourceFile {
public:
    SourceFile() = default;
    SourceFile(std::string path, std::string content);

    // Reads a file from disk. Throws IoError / EncodingError.
    static SourceFile load(const std::string& path, const std::string& display_path);

    const std::string& path() const { return path_; }
    const std::string& content() const { return content_; }
    LineCol line_col(std::size_t offset) const;
    int line_count() const { return static_cast<int>(line_starts_.size()); }

private:
    void index_lines();

    std::string path_;
    std::string content_;
    std::vector<std::size_t> line_starts_;
};

enum class Severity { warning, error };

struct Diagnostic {
    std::string file;
    int line = 0;
    Severity severity = Severity::warning;
    std::string message;

    std::string str() const;
};

}  // namespace suitlint
