#include "oscillab/seq/sequence_io.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/seq/generators.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace oscillab::seq {

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
    char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
    out.write(bytes, 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) fail(ErrorKind::io, "OSCS1: truncated stream");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
    return v;
}

}  // namespace

void write_csv(const WeightSequence& c, std::ostream& out) {
    out << "n,re,im\n";
    char line[96];
    for (std::size_t n = 0; n < c.size(); ++n) {
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", n, c[n].real(), c[n].imag());
        out << line;
    }
}

WeightSequence read_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("n,re,im", 0) != 0) fail(ErrorKind::io, source + ": expected CSV header 'n,re,im'");
    std::vector<std::complex<double>> values;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string n_s, re_s, im_s;
        if (!std::getline(ls, n_s, ',') || !std::getline(ls, re_s, ',') || !std::getline(ls, im_s))
            fail(ErrorKind::io, source + ": malformed CSV row '" + line + "'");
        if (std::stoull(n_s) != expected) fail(ErrorKind::io, source + ": CSV rows must be indexed 0,1,2,...");
        values.emplace_back(std::stod(re_s), std::stod(im_s));
        ++expected;
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
    return from_values(std::move(v), source);
}

void write_binary(const WeightSequence& c, std::ostream& out) {
    out.write(kBinaryMagic, 5);
    put_u64(out, c.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        put_u64(out, std::bit_cast<std::uint64_t>(c[n].real()));
        put_u64(out, std::bit_cast<std::uint64_t>(c[n].imag()));
    }
}

WeightSequence read_binary(std::istream& in, const std::string& source) {
    char magic[5];
    if (!in.read(magic, 5) || std::memcmp(magic, kBinaryMagic, 5) != 0) fail(ErrorKind::io, source + ": missing OSCS1 magic");
    const std::uint64_t count = get_u64(in);
    if (count > default_limits().max_sequence_length) fail(ErrorKind::capacity, source + ": sequence too long");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(count));
    for (std::uint64_t n = 0; n < count; ++n) {
        const double re = std::bit_cast<double>(get_u64(in));
        const double im = std::bit_cast<double>(get_u64(in));
        v(static_cast<Eigen::Index>(n)) = {re, im};
    }
    return from_values(std::move(v), source);
}

WeightSequence load_sequence(const std::string& text) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_regular_file(text, ec)) return build(parse_generator(text));
    std::ifstream in(text, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open " + text);
    char head[5] = {};
    in.read(head, 5);
    in.clear();
    in.seekg(0);
    if (std::memcmp(head, kBinaryMagic, 5) == 0) return read_binary(in, text);
    if (head[0] == '{') {
        std::stringstream ss;
        ss << in.rdbuf();
        Json j;
        try {
            j = Json::parse(ss.str());
        } catch (const Json::exception& e) {
            fail(ErrorKind::config, text + ": " + e.what());
        }
        return build(generator_from_json(j));
    }
    return read_csv(in, text);
}

}  // namespace oscillab::seq
