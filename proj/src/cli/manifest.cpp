#include "oscillab/cli/manifest.hpp"

#include "oscillab/core/error.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

namespace oscillab::cli {

namespace {

Json to_json(const FileRecord& f) { return {{"path", f.path}, {"sha256", f.sha256}, {"bytes", f.bytes}}; }

FileRecord file_from_json(const Json& j) {
    reject_unknown_keys(j, {"path", "sha256", "bytes"}, "manifest file entry");
    return {j.at("path").get<std::string>(), j.at("sha256").get<std::string>(), j.at("bytes").get<std::uintmax_t>()};
}

struct DigestDeleter {
    void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

}  // namespace

Json to_json(const RunManifest& m) {
    Json j;
    j["config"] = m.config;
    j["version"] = m.version;
    j["threads"] = m.threads;
    j["inputs"] = Json::array();
    for (const auto& f : m.inputs) j["inputs"].push_back(to_json(f));
    j["outputs"] = Json::array();
    for (const auto& f : m.outputs) j["outputs"].push_back(to_json(f));
    j["timings"] = Json::array();
    for (const auto& t : m.timings) j["timings"].push_back({{"stage", t.stage}, {"seconds", t.seconds}});
    return j;
}

RunManifest manifest_from_json(const Json& j) {
    try {
        reject_unknown_keys(j, {"config", "version", "threads", "inputs", "outputs", "timings"}, "manifest");
        RunManifest m;
        m.config = j.at("config");
        if (!m.config.is_object() || !m.config.contains("subcommand")) fail(ErrorKind::config, "manifest: config has no subcommand");
        m.version = j.value("version", "");
        m.threads = j.value("threads", 1u);
        for (const auto& f : j.value("inputs", Json::array())) m.inputs.push_back(file_from_json(f));
        for (const auto& f : j.value("outputs", Json::array())) m.outputs.push_back(file_from_json(f));
        for (const auto& t : j.value("timings", Json::array()))
            m.timings.push_back({t.at("stage").get<std::string>(), t.at("seconds").get<double>()});
        return m;
    } catch (const Json::exception& e) {
        fail(ErrorKind::config, std::string("manifest: ") + e.what());
    }
}

RunManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open manifest " + path);
    try {
        return manifest_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::config, path + ": " + e.what());
    }
}

std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, DigestDeleter> ctx(EVP_MD_CTX_new());
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        fail(ErrorKind::internal, "sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return sha256_hex(ss.str());
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorKind::io, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) fail(ErrorKind::io, "short write to " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        fail(ErrorKind::io, "cannot move output into place: " + path.string());
    }
}

}  // namespace oscillab::cli
