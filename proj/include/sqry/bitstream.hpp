#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sqry {

/// Appends bit fields most-significant bit first.
class BitWriter {
public:
    void write(std::uint32_t value, int width) {
        for (int i = width - 1; i >= 0; --i) write_bit((value >> i) & 1u);
    }

    void write_bit(bool bit) {
        if (bit_count_ % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count_ % 8));
        ++bit_count_;
    }

    void write_bytes(std::span<const std::uint8_t> data) {
        for (auto b : data) write(b, 8);
    }

    std::size_t bit_count() const { return bit_count_; }

    /// Trailing bits of the last byte are zero.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take() && { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_count_ = 0;
};

/// Reads fields written by BitWriter. Reading past the end throws
/// std::out_of_range; callers translate it into their own error.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint32_t read(int width) {
        if (remaining() < static_cast<std::size_t>(width)) throw std::out_of_range("bitstream exhausted");
        std::uint32_t v = 0;
        for (int i = 0; i < width; ++i) {
            std::uint8_t byte = data_[pos_ / 8];
            v = (v << 1) | ((byte >> (7 - pos_ % 8)) & 1u);
            ++pos_;
        }
        return v;
    }

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return data_.size() * 8 - pos_; }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace sqry
