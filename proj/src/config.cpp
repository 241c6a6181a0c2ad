#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "codemetrics/cli.hpp"

namespace codemetrics {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - start));
        if (!item.empty()) {
            out.push_back(item);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

double positive_number(const std::string& key, const std::string& text) {
    const auto value = trim(text);
    double parsed = 0.0;
    const auto* end = value.data() + value.size();
    const auto result = std::from_chars(value.data(), end, parsed);
    if (value.empty() || result.ec != std::errc() || result.ptr != end) {
        throw ConfigError("'" + key + "' is not a number: '" + value + "'");
    }
    if (!(parsed > 0.0)) {
        throw ConfigError("'" + key + "' must be positive");
    }
    return parsed;
}

}  // namespace

std::vector<std::string> normalize_extensions(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (auto ext : raw) {
        if (ext.empty()) {
            continue;
        }
        if (ext.front() != '.') {
            ext.insert(ext.begin(), '.');
        }
        out.push_back(std::move(ext));
    }
    return out;
}

std::vector<std::string> split_comma_list(std::string_view text) { return split_list(text); }

void apply_config_text(std::string_view ini_text, RunConfig& config) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        std::istringstream in{std::string(ini_text)};
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("malformed config: " + e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            throw ConfigError("key '" + section + "' outside of a section");
        }
        for (const auto& [key, node] : body) {
            const auto value = node.get_value<std::string>();
            const auto where = section + "." + key;
            if (section == "caps") {
                const auto metric = metric_from_name(key);
                if (!metric || std::find(RelationMatrix::kColumns.begin(), RelationMatrix::kColumns.end(), *metric) ==
                                   RelationMatrix::kColumns.end()) {
                    throw ConfigError("unknown cap '" + key + "'");
                }
                config.caps.caps[*metric] = positive_number(where, value);
            } else if (section == "weights") {
                if (key == "strong_inverse") {
                    config.weights.strong_inverse = positive_number(where, value);
                } else if (key == "inverse") {
                    config.weights.inverse = positive_number(where, value);
                } else {
                    throw ConfigError("unknown weight '" + key + "'");
                }
            } else if (section == "admission") {
                if (key == "extensions") {
                    config.extensions = normalize_extensions(split_list(value));
                    if (config.extensions.empty()) {
                        throw ConfigError("admission.extensions is empty");
                    }
                } else if (key == "exclude") {
                    config.excludes = split_list(value);
                } else {
                    throw ConfigError("unknown admission key '" + key + "'");
                }
            } else {
                throw ConfigError("unknown section [" + section + "]");
            }
        }
    }
}

std::string config_fingerprint(const RunConfig& config) {
    std::ostringstream canonical;
    canonical << "caps";
    for (const auto& [metric, cap] : config.caps.caps) {
        canonical << ';' << metric_name(metric) << '=' << format_number(cap);
    }
    canonical << "|weights;I=" << format_number(config.weights.strong_inverse)
              << ";i=" << format_number(config.weights.inverse) << "|ext";
    auto extensions = config.extensions;
    std::sort(extensions.begin(), extensions.end());
    extensions.erase(std::unique(extensions.begin(), extensions.end()), extensions.end());
    for (const auto& e : extensions) {
        canonical << ';' << e;
    }
    canonical << "|wmc=" << (config.wmc_unit ? "unit" : "complexity");

    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical.str()) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

}  // namespace codemetrics
