#include "suitlint/history.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "suitlint/parser.hpp"
#include "suitlint/process.hpp"
#include "suitlint/util.hpp"

namespace fs = std::filesystem;

namespace suitlint {

namespace {

std::string root_prefix(const std::string& root) {
    fs::path p(root);
    std::string base = p.filename().string();
    if (base.empty()) base = p.parent_path().filename().string();
    return base.empty() ? root : base;
}

std::vector<VersionRecord> walk_git(const std::string& root,
                                    const std::vector<std::string>& extensions) {
    ProcessResult log = run_process(
        {"git", "-C", root, "log", "--first-parent", "--reverse",
         "--pretty=format:C%x09%H%x09%ct%x09%P%x09%an", "--name-only"});
    if (log.exit_code != 0)
        throw RepoUnreadableError("git log failed for repository: " + root);

    std::vector<VersionRecord> records;
    VersionRecord current;
    bool open = false;
    auto flush = [&]() {
        if (open && !current.changed_paths.empty()) records.push_back(current);
        open = false;
    };
    for (const std::string& line : split(log.output, '\n')) {
        if (line.rfind("C\t", 0) == 0) {
            flush();
            std::vector<std::string> parts = split(line, '\t');
            current = VersionRecord{};
            current.root = root;
            current.version_id = parts.size() > 1 ? parts[1] : "";
            current.timestamp = parts.size() > 2 ? std::strtoll(parts[2].c_str(), nullptr, 10) : 0;
            if (parts.size() > 3 && !parts[3].empty())
                current.parent_version_id = split(parts[3], ' ')[0];
            current.author = parts.size() > 4 ? parts[4] : "";
            open = true;
            continue;
        }
        if (line.empty()) continue;
        if (open && extension_matches(line, extensions)) current.changed_paths.push_back(line);
    }
    flush();
    return records;
}

std::vector<std::string> matching_files_under(const fs::path& dir,
                                              const std::vector<std::string>& extensions) {
    std::vector<std::string> out;
    if (!fs::exists(dir)) return out;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string rel = fs::relative(entry.path(), dir).generic_string();
        if (extension_matches(rel, extensions)) out.push_back(rel);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VersionRecord> walk_directory(const std::string& root,
                                          const std::vector<std::string>& extensions) {
    std::vector<std::string> versions;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) versions.push_back(entry.path().filename().string());
    }
    std::sort(versions.begin(), versions.end());

    std::vector<VersionRecord> records;
    std::string parent;
    for (std::size_t i = 0; i < versions.size(); ++i) {
        VersionRecord r;
        r.root = root;
        r.version_id = versions[i];
        r.timestamp = static_cast<std::int64_t>(i);
        r.changed_paths = matching_files_under(fs::path(root) / versions[i], extensions);
        if (r.changed_paths.empty()) continue;
        r.parent_version_id = parent;
        parent = r.version_id;
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace

bool extension_matches(const std::string& path, const std::vector<std::string>& extensions) {
    for (const std::string& ext : extensions) {
        if (path.size() >= ext.size() &&
            iequals(std::string_view(path).substr(path.size() - ext.size()), ext))
            return true;
    }
    return false;
}

bool is_git_repository(const std::string& path) { return fs::exists(fs::path(path) / ".git"); }

ProjectHistory::ProjectHistory(std::string project_name, std::vector<std::string> roots,
                               std::vector<std::string> extensions,
                               const KeywordCatalog* catalog)
    : name_(std::move(project_name)),
      roots_(std::move(roots)),
      extensions_(std::move(extensions)),
      catalog_(catalog) {
    prefix_paths_ = roots_.size() > 1;
}

std::map<std::string, std::string> ProjectHistory::files_at(const VersionRecord& record) const {
    std::map<std::string, std::string> files;  // display path -> content

    for (const std::string& root : roots_) {
        // Effective version of this root as of the record's position in the
        // merged timeline (ordered by timestamp, then root).
        const VersionRecord* effective = nullptr;
        for (const auto& r : records_) {
            if (r.root != root) continue;
            bool not_after = r.timestamp < record.timestamp ||
                             (r.timestamp == record.timestamp && r.root <= record.root);
            if (not_after) effective = &r;
        }
        if (root == record.root) effective = &record;
        if (!effective) continue;

        std::string prefix = prefix_paths_ ? root_prefix(root) + "/" : "";
        if (is_git_repository(root)) {
            ProcessResult ls = run_process(
                {"git", "-C", root, "ls-tree", "-r", "--name-only", effective->version_id});
            if (ls.exit_code != 0)
                throw CheckoutError("git ls-tree failed at " + effective->version_id);
            for (const std::string& path : split(ls.output, '\n')) {
                if (path.empty() || !extension_matches(path, extensions_)) continue;
                ProcessResult show = run_process(
                    {"git", "-C", root, "show", effective->version_id + ":" + path});
                if (show.exit_code != 0)
                    throw CheckoutError("git show failed for " + path + " at " +
                                        effective->version_id);
                files[prefix + path] = show.output;
            }
        } else {
            fs::path dir = fs::path(root) / effective->version_id;
            for (const std::string& rel : matching_files_under(dir, extensions_)) {
                std::ifstream in(dir / rel, std::ios::binary);
                if (!in) throw CheckoutError("cannot read " + (dir / rel).string());
                std::ostringstream buf;
                buf << in.rdbuf();
                files[prefix + rel] = buf.str();
            }
        }
    }
    return files;
}

std::shared_ptr<const Snapshot> ProjectHistory::materialize(const VersionRecord& record) {
    std::string cache_key = record.root + "|" + record.version_id;
    if (auto it = cache_.find(cache_key); it != cache_.end()) return it->second;

    std::vector<Diagnostic> load_diags;
    std::vector<std::shared_ptr<SuiteAst>> asts;
    for (const auto& [path, content] : files_at(record)) {
        try {
            SourceFile file(path, content);
            asts.push_back(std::make_shared<SuiteAst>(parse_file(file)));
        } catch (const EncodingError& e) {
            load_diags.push_back(Diagnostic{path, 0, Severity::error, e.what()});
        }
    }
    auto snap = std::make_shared<Snapshot>(
        build_snapshot(std::move(asts), *catalog_, record.version_id));
    for (const auto& d : load_diags) snap->diagnostics.push_back(d);
    cache_[cache_key] = snap;
    return snap;
}

ProjectHistory walk_repository(const std::string& project_name,
                               const std::vector<std::string>& roots,
                               const std::vector<std::string>& extensions,
                               const KeywordCatalog& catalog, const std::string&) {
    if (roots.empty()) throw RepoUnreadableError("no project roots given");
    for (const std::string& root : roots) {
        if (!fs::exists(root) || !fs::is_directory(root))
            throw RepoUnreadableError("not a readable directory: " + root);
    }

    ProjectHistory history(project_name, roots, extensions, &catalog);
    for (const std::string& root : roots) {
        std::vector<VersionRecord> records = is_git_repository(root)
                                                 ? walk_git(root, extensions)
                                                 : walk_directory(root, extensions);
        history.records_.insert(history.records_.end(), records.begin(), records.end());
    }
    std::stable_sort(history.records_.begin(), history.records_.end(),
                     [](const VersionRecord& a, const VersionRecord& b) {
                         if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                         return a.root < b.root;
                     });
    if (history.records_.empty())
        throw NoSuitVersionsError("no versions touching matching files under the given roots");
    return history;
}

}  // namespace suitlint
