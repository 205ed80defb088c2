#pragma once

// Placing a payload into a byte-mode QR symbol and getting it back out.
//
// Capacity logic is ours; symbol encodation (Reed-Solomon, masking) is done
// by libzint and reading by the zxing decoder, both from the vendored
// zxing-cpp tree.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqry/codec.hpp"
#include "sqry/error.hpp"

namespace sqry::qr {

enum class EcLevel { L, M, Q, H };

inline constexpr int kMinVersion = 1;
inline constexpr int kMaxVersion = 40;

std::string_view to_string(EcLevel level);
std::optional<EcLevel> parse_ec_level(std::string_view text);

class CapacityError : public Error {
public:
    explicit CapacityError(std::string message)
        : Error(ErrorCategory::Capacity, "PayloadExceedsCapacity", std::move(message)) {}
};

/// Byte-mode data capacity in bytes (ISO/IEC 18004 table), e.g.
/// byte_capacity(40, L) == 2953. Throws std::out_of_range outside 1..40.
std::size_t byte_capacity(int version, EcLevel level);

/// Smallest version holding `payload_bytes` (>= 1) at `level`. Throws
/// CapacityError beyond byte_capacity(40, level).
int min_version_for(std::size_t payload_bytes, EcLevel level);

/// Dark/light module grid, without quiet zone.
struct Symbol {
    int version = 0;
    EcLevel ec_level = EcLevel::L;
    int size = 0;                       // modules per side, 17 + 4 * version
    std::vector<std::uint8_t> modules;  // row-major, 1 = dark

    bool dark(int x, int y) const { return modules[static_cast<std::size_t>(y * size + x)] != 0; }
};

/// Encodes payload.bytes as a single byte-mode segment without ECI, at
/// min_version_for(bytes, level).
Symbol embed_qr(const codec::Payload& payload, EcLevel level = EcLevel::L);

/// 8-bit grayscale image, 0 = black, 255 = white.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
};

inline constexpr int kQuietZone = 4;

Raster rasterize(const Symbol& symbol, int scale = 8, int quiet_zone = kQuietZone);

/// Standalone SVG with one unit per module.
std::string render_svg(const Symbol& symbol, int quiet_zone = kQuietZone);

std::vector<std::uint8_t> encode_png(const Raster& image);

/// Any PNG libpng can read, converted to 8-bit grayscale. Throws
/// std::runtime_error on malformed input.
Raster decode_png(std::span<const std::uint8_t> png);

/// Finds a QR symbol in the image and returns its byte content, or nullopt
/// when nothing decodes.
std::optional<std::vector<std::uint8_t>> scan(const Raster& image);

}  // namespace sqry::qr
