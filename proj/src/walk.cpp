#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "codemetrics/cli.hpp"

namespace codemetrics {

namespace fs = std::filesystem;

bool glob_match(std::string_view pattern, std::string_view path) {
    if (pattern.empty()) {
        return path.empty();
    }
    if (pattern.substr(0, 3) == "**/") {
        // Zero segments, or consume one segment and retry.
        if (glob_match(pattern.substr(3), path)) {
            return true;
        }
        const auto slash = path.find('/');
        return slash != std::string_view::npos && glob_match(pattern, path.substr(slash + 1));
    }
    if (pattern.substr(0, 2) == "**") {
        for (std::size_t i = 0; i <= path.size(); ++i) {
            if (glob_match(pattern.substr(2), path.substr(i))) {
                return true;
            }
        }
        return false;
    }
    if (pattern.front() == '*') {
        for (std::size_t i = 0; i <= path.size(); ++i) {
            if (glob_match(pattern.substr(1), path.substr(i))) {
                return true;
            }
            if (i < path.size() && path[i] == '/') {
                break;
            }
        }
        return false;
    }
    if (path.empty()) {
        return false;
    }
    if (pattern.front() == '?') {
        return path.front() != '/' && glob_match(pattern.substr(1), path.substr(1));
    }
    return pattern.front() == path.front() && glob_match(pattern.substr(1), path.substr(1));
}

namespace {

bool admitted_extension(const fs::path& p, const std::vector<std::string>& extensions) {
    const auto ext = p.extension().string();
    return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
}

bool excluded(const std::string& display, const std::vector<std::string>& excludes) {
    return std::any_of(excludes.begin(), excludes.end(),
                       [&](const std::string& g) { return glob_match(g, display); });
}

void note(Diagnostics* diags, const fs::path& where, std::string message) {
    if (diags != nullptr) {
        diags->push_back({Severity::Warning, where.generic_string(), 0, std::move(message)});
    }
}

}  // namespace

std::vector<AdmittedFile> walk_and_admit(const RunConfig& config, Diagnostics* diags) {
    std::vector<AdmittedFile> out;
    const bool prefix_root = config.roots.size() > 1;
    for (const auto& root : config.roots) {
        std::error_code ec;
        const auto status = fs::status(root, ec);
        if (ec || !fs::exists(status)) {
            throw IoError("cannot read root '" + root.string() + "'");
        }
        const auto prefix = prefix_root ? root.lexically_normal().filename().generic_string() + "/" : std::string();
        if (fs::is_regular_file(status)) {
            if (admitted_extension(root, config.extensions)) {
                auto display = prefix + root.filename().generic_string();
                if (!excluded(display, config.excludes)) {
                    out.push_back({root, std::move(display)});
                }
            }
            continue;
        }
        fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
        if (ec) {
            throw IoError("cannot read root '" + root.string() + "': " + ec.message());
        }
        for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
            if (ec) {
                note(diags, it->path(), "cannot read directory: " + ec.message());
                ec.clear();
                continue;
            }
            const auto& entry = *it;
            std::error_code entry_ec;
            if (entry.is_symlink(entry_ec)) {
                continue;
            }
            if (entry.is_directory(entry_ec)) {
                continue;
            }
            if (!entry.is_regular_file(entry_ec) || !admitted_extension(entry.path(), config.extensions)) {
                continue;
            }
            auto display = prefix + entry.path().lexically_relative(root).generic_string();
            if (excluded(display, config.excludes)) {
                continue;
            }
            out.push_back({entry.path(), std::move(display)});
        }
    }
    std::sort(out.begin(), out.end(), [](const AdmittedFile& a, const AdmittedFile& b) {
        return a.display != b.display ? a.display < b.display : a.path < b.path;
    });
    if (out.empty()) {
        throw IoError("empty corpus");
    }
    return out;
}

ScanResult scan_corpus(const std::vector<AdmittedFile>& files, unsigned jobs, Diagnostics* diags) {
    struct Slot {
        std::optional<SourceFileRecord> record;
        Diagnostics diags;
    };
    std::vector<Slot> slots(files.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (auto i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            auto& slot = slots[i];
            std::ifstream in(files[i].path, std::ios::binary);
            std::ostringstream text;
            if (in) {
                text << in.rdbuf();
            }
            if (!in || in.bad()) {
                slot.diags.push_back({Severity::Warning, files[i].display, 0, "cannot read file; skipped"});
                continue;
            }
            slot.record = analyze_source(files[i].display, text.str(), &slot.diags);
        }
    };
    const auto workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(files.size(), 1));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    Diagnostics merged;
    ScanResult result;
    for (auto& slot : slots) {
        merged.insert(merged.end(), slot.diags.begin(), slot.diags.end());
        if (slot.record) {
            result.files.push_back(std::move(*slot.record));
        }
    }
    if (result.files.empty()) {
        if (diags != nullptr) {
            diags->insert(diags->end(), merged.begin(), merged.end());
        }
        throw IoError("empty corpus");
    }
    result.graph = build_class_graph(result.files, &merged);
    result.diagnostic_count = merged.size();
    if (diags != nullptr) {
        diags->insert(diags->end(), merged.begin(), merged.end());
    }
    return result;
}

}  // namespace codemetrics
