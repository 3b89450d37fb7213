#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "suitlint/calltree.hpp"
#include "suitlint/catalog.hpp"

namespace suitlint {

struct VersionRecord {
    std::string version_id;           // commit hash or directory name
    std::int64_t timestamp = 0;       // commit time, or index in directory mode
    std::string author;
    std::vector<std::string> changed_paths;  // matching files touched
    std::string parent_version_id;
    std::string root;  // the root this record originated from
};

class ProjectHistory {
public:
    ProjectHistory(std::string project_name, std::vector<std::string> roots,
                   std::vector<std::string> extensions, const KeywordCatalog* catalog);

    const std::string& project_name() const { return name_; }
    const std::vector<VersionRecord>& records() const { return records_; }

    // Reads the version's matching files (read-only) and builds a Snapshot.
    // Cached per version id. Throws CheckoutError on unreadable content.
    std::shared_ptr<const Snapshot> materialize(const VersionRecord& record);

private:
    friend ProjectHistory walk_repository(const std::string&, const std::vector<std::string>&,
                                          const std::vector<std::string>&,
                                          const KeywordCatalog&, const std::string&);

    std::map<std::string, std::string> files_at(const VersionRecord& record) const;

    std::string name_;
    std::vector<std::string> roots_;
    std::vector<std::string> extensions_;
    const KeywordCatalog* catalog_;
    std::vector<VersionRecord> records_;
    std::map<std::string, std::shared_ptr<const Snapshot>> cache_;
    bool prefix_paths_ = false;  // multi-root: prefix file paths by root name
};

// True when path looks like a version-control repository.
bool is_git_repository(const std::string& path);

// Walks one or more roots into an ordered sequence of versions that touch
// at least one file with a matching extension. A git repository walks its
// first-parent chain oldest to newest; a plain directory treats each
// subdirectory, sorted lexicographically, as one version. Multiple roots
// are merged into a single timeline ordered by commit time, and their
// snapshots are unioned with root-name path prefixes.
// Throws RepoUnreadableError / NoSuitVersionsError.
ProjectHistory walk_repository(const std::string& project_name,
                               const std::vector<std::string>& roots,
                               const std::vector<std::string>& extensions,
                               const KeywordCatalog& catalog, const std::string& mode_hint = "");

bool extension_matches(const std::string& path, const std::vector<std::string>& extensions);

}  // namespace suitlint
