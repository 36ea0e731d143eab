#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "glab/numbers.hpp"
#include "glab/sequences.hpp"
#include "glab/stirling.hpp"

namespace glab::cache {

// Length-prefixed binary layout: magic, u64 count, then per integer one sign
// byte and a u64-prefixed big-endian magnitude blob. Row files prefix each
// row with its length. Unreadable or implausible files are ignored.

namespace detail {

constexpr char kMagic[8] = {'G', 'L', 'A', 'B', 'C', '1', '\n', '\0'};

inline void put_u64(std::ostream& os, std::uint64_t v) {
    char buf[8];
    for (int i = 7; i >= 0; --i) {
        buf[i] = static_cast<char>(v & 0xff);
        v >>= 8;
    }
    os.write(buf, 8);
}

inline bool get_u64(std::istream& is, std::uint64_t& v) {
    char buf[8];
    if (!is.read(buf, 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | static_cast<unsigned char>(buf[i]);
    return true;
}

inline void put_integer(std::ostream& os, const Integer& n) {
    os.put(n < 0 ? 1 : 0);
    std::vector<unsigned char> bytes;
    Integer mag = n < 0 ? Integer(-n) : n;
    export_bits(mag, std::back_inserter(bytes), 8);
    put_u64(os, bytes.size());
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
}

inline bool get_integer(std::istream& is, Integer& n) {
    int sign = is.get();
    if (sign != 0 && sign != 1) return false;
    std::uint64_t len = 0;
    if (!get_u64(is, len) || len > (1u << 26)) return false;
    std::vector<unsigned char> bytes(len);
    if (len > 0 &&
        !is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(len)))
        return false;
    Integer mag = 0;
    if (!bytes.empty()) import_bits(mag, bytes.begin(), bytes.end(), 8);
    n = sign ? Integer(-mag) : mag;
    return true;
}

inline void save_list(const std::filesystem::path& file, const std::vector<Integer>& values) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) return;
    os.write(kMagic, 8);
    put_u64(os, values.size());
    for (const auto& v : values) put_integer(os, v);
}

inline bool load_list(const std::filesystem::path& file, std::vector<Integer>& values) {
    std::ifstream is(file, std::ios::binary);
    if (!is) return false;
    char magic[8];
    if (!is.read(magic, 8) || !std::equal(magic, magic + 8, kMagic)) return false;
    std::uint64_t count = 0;
    if (!get_u64(is, count) || count > (1u << 24)) return false;
    values.clear();
    values.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Integer v;
        if (!get_integer(is, v)) return false;
        values.push_back(std::move(v));
    }
    return true;
}

inline void save_rows(const std::filesystem::path& file,
                      const std::vector<std::vector<Integer>>& rows) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) return;
    os.write(kMagic, 8);
    put_u64(os, rows.size());
    for (const auto& row : rows) {
        put_u64(os, row.size());
        for (const auto& v : row) put_integer(os, v);
    }
}

inline bool load_rows(const std::filesystem::path& file,
                      std::vector<std::vector<Integer>>& rows) {
    std::ifstream is(file, std::ios::binary);
    if (!is) return false;
    char magic[8];
    if (!is.read(magic, 8) || !std::equal(magic, magic + 8, kMagic)) return false;
    std::uint64_t count = 0;
    if (!get_u64(is, count) || count > (1u << 20)) return false;
    rows.clear();
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t len = 0;
        if (!get_u64(is, len) || len > (1u << 20)) return false;
        std::vector<Integer> row(len);
        for (auto& v : row)
            if (!get_integer(is, v)) return false;
        rows.push_back(std::move(row));
    }
    return true;
}

}  // namespace detail

/// Seeds the factorial and Stirling caches from `dir`, if files exist.
inline void load(const std::filesystem::path& dir) {
    std::vector<Integer> list;
    if (detail::load_list(dir / "factorials.bin", list) && !list.empty() && list[0] == 1)
        glab::detail::factorial_cache().seed(list);
    std::vector<std::vector<Integer>> rows;
    if (detail::load_rows(dir / "stirling_first.bin", rows))
        stirling_table(StirlingKind::first_signed).seed(rows);
    if (detail::load_rows(dir / "stirling_second.bin", rows))
        stirling_table(StirlingKind::second).seed(rows);
}

/// Writes the current cache contents under `dir` (created if missing).
inline void save(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    detail::save_list(dir / "factorials.bin", glab::detail::factorial_cache().snapshot());
    detail::save_rows(dir / "stirling_first.bin",
                      stirling_table(StirlingKind::first_signed).snapshot());
    detail::save_rows(dir / "stirling_second.bin",
                      stirling_table(StirlingKind::second).snapshot());
}

}  // namespace glab::cache
