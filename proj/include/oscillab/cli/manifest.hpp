#pragma once

#include "oscillab/core/serialize.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace oscillab::cli {

struct FileRecord {
    std::string path;  // outputs: relative to the output directory
    std::string sha256;
    std::uintmax_t bytes = 0;
};

struct StageTiming {
    std::string stage;
    double seconds = 0.0;
};

/// Config echo plus what the run produced. `config` holds the subcommand and
/// its options exactly as they were applied, so it can be fed back to run().
struct RunManifest {
    Json config;
    std::string version;
    unsigned threads = 1;
    std::vector<FileRecord> inputs;
    std::vector<FileRecord> outputs;
    std::vector<StageTiming> timings;
};

Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);
RunManifest load_manifest(const std::string& path);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Writes to a temporary sibling, then renames over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace oscillab::cli
