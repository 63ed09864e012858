#include "rwrank/persistence.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace rwrank {

namespace {

constexpr char kMagic[4] = {'T', 'P', 'A', '1'};

std::array<std::uint32_t, 256> make_crc_table() {
    std::array<std::uint32_t, 256> table{};
    for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t crc = i;
        for (int bit = 0; bit < 8; ++bit)
            crc = (crc >> 1) ^ ((crc & 1u) ? 0xEDB88320u : 0u);
        table[i] = crc;
    }
    return table;
}

std::uint32_t crc32(const unsigned char* data, std::size_t size) {
    static const std::array<std::uint32_t, 256> table = make_crc_table();
    std::uint32_t crc = 0xFFFFFFFFu;
    for (std::size_t i = 0; i < size; ++i) crc = (crc >> 8) ^ table[(crc ^ data[i]) & 0xFFu];
    return crc ^ 0xFFFFFFFFu;
}

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>(v >> (8 * i)));
}

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>(v >> (8 * i)));
}

void put_f64(std::string& buf, double v) { put_u64(buf, std::bit_cast<std::uint64_t>(v)); }

class Reader {
public:
    Reader(const unsigned char* data, std::size_t size) : data_(data), size_(size) {}

    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(next()) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(next()) << (8 * i);
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }

private:
    unsigned char next() { return data_[pos_++]; }
    const unsigned char* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
};

}  // namespace

void save_artifact(const StrangerArtifact& artifact, const std::filesystem::path& path) {
    std::string buf;
    buf.reserve(48 + 8 * artifact.stranger_scores.size());
    buf.append(kMagic, sizeof(kMagic));
    put_u32(buf, kArtifactFormatVersion);
    put_u64(buf, artifact.stranger_scores.size());
    put_f64(buf, artifact.restart_prob);
    put_f64(buf, artifact.tolerance);
    put_u32(buf, artifact.stranger_start);
    put_u64(buf, artifact.graph_fingerprint);
    for (double s : artifact.stranger_scores) put_f64(buf, s);
    put_u32(buf, crc32(reinterpret_cast<const unsigned char*>(buf.data()), buf.size()));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    out.flush();
    if (!out) throw std::runtime_error("I/O error while writing " + path.string());
}

StrangerArtifact load_artifact(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open artifact: " + path.string());
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("I/O error while reading " + path.string());

    const auto* bytes = reinterpret_cast<const unsigned char*>(buf.data());
    if (buf.size() < 48) throw std::runtime_error("artifact truncated: " + path.string());
    if (std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("bad artifact magic: " + path.string());

    Reader header(bytes + 4, buf.size() - 4);
    const std::uint32_t version = header.u32();
    if (version != kArtifactFormatVersion)
        throw std::runtime_error("unsupported artifact version " + std::to_string(version));
    const std::uint64_t n = header.u64();

    const std::uint64_t expected_size = 48 + 8 * n;
    if (buf.size() != expected_size)
        throw std::runtime_error("artifact truncated or oversized: expected " +
                                 std::to_string(expected_size) + " bytes, got " +
                                 std::to_string(buf.size()));

    Reader trailer(bytes + buf.size() - 4, 4);
    if (trailer.u32() != crc32(bytes, buf.size() - 4))
        throw std::runtime_error("artifact checksum mismatch: " + path.string());

    StrangerArtifact artifact;
    artifact.restart_prob = header.f64();
    artifact.tolerance = header.f64();
    artifact.stranger_start = header.u32();
    artifact.graph_fingerprint = header.u64();
    artifact.stranger_scores.resize(n);
    Reader body(bytes + 44, buf.size() - 44);
    for (std::uint64_t i = 0; i < n; ++i) artifact.stranger_scores[i] = body.f64();
    return artifact;
}

}  // namespace rwrank
