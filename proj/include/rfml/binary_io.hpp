#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "rfml/error.hpp"

// Little-endian binary helpers shared by every on-disk format.
namespace rfml::io {

static_assert(std::endian::native == std::endian::little,
              "on-disk formats are little-endian; big-endian hosts need byte swapping");

class Writer {
public:
    template <typename T>
        requires std::is_arithmetic_v<T>
    void put(T v)
    {
        const auto at = buf_.size();
        buf_.resize(at + sizeof(T));
        std::memcpy(buf_.data() + at, &v, sizeof(T));
    }

    void put_bytes(std::string_view bytes) { buf_.insert(buf_.end(), bytes.begin(), bytes.end()); }

    void put_magic(std::string_view magic) { put_bytes(magic); }

    // u16 length prefix + bytes.
    void put_string(std::string_view s);

    const std::vector<char>& bytes() const noexcept { return buf_; }
    std::size_t size() const noexcept { return buf_.size(); }

private:
    std::vector<char> buf_;
};

class Reader {
public:
    Reader(std::vector<char> bytes, std::string source)
        : buf_(std::move(bytes)), source_(std::move(source))
    {
    }

    template <typename T>
        requires std::is_arithmetic_v<T>
    T get()
    {
        require(sizeof(T));
        T v;
        std::memcpy(&v, buf_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }

    std::string get_bytes(std::size_t n)
    {
        require(n);
        std::string s(buf_.data() + pos_, n);
        pos_ += n;
        return s;
    }

    std::string get_string() { return get_bytes(get<std::uint16_t>()); }

    void expect_magic(std::string_view magic);

    std::size_t remaining() const noexcept { return buf_.size() - pos_; }
    std::size_t position() const noexcept { return pos_; }
    const std::string& source() const noexcept { return source_; }

    [[noreturn]] void fail(const std::string& what) const;

private:
    void require(std::size_t n) const
    {
        if (buf_.size() - pos_ < n) {
            fail("truncated file (need " + std::to_string(n) + " bytes at offset " +
                 std::to_string(pos_) + ")");
        }
    }

    std::vector<char> buf_;
    std::string source_;
    std::size_t pos_ = 0;
};

std::vector<char> read_file(const std::filesystem::path& path);

// Writes to a sibling temporary and renames, so a failed write never leaves a
// partial artifact at `path`.
void write_file_atomic(const std::filesystem::path& path, const std::vector<char>& bytes);
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

}  // namespace rfml::io
