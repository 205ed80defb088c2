#include <array>
#include <stdexcept>

#include "sqry/qr.hpp"

namespace sqry::qr {

namespace {

// Indexed [version - 1][L, M, Q, H]. Mirrors data/qr_byte_capacity.csv.
constexpr std::array<std::array<std::size_t, 4>, 40> kByteCapacity = {{
    {17, 14, 11, 7},
    {32, 26, 20, 14},
    {53, 42, 32, 24},
    {78, 62, 46, 34},
    {106, 84, 60, 44},
    {134, 106, 74, 58},
    {154, 122, 86, 64},
    {192, 152, 108, 84},
    {230, 180, 130, 98},
    {271, 213, 151, 119},
    {321, 251, 177, 137},
    {367, 287, 203, 155},
    {425, 331, 241, 177},
    {458, 362, 258, 194},
    {520, 412, 292, 220},
    {586, 450, 322, 250},
    {644, 504, 364, 280},
    {718, 560, 394, 310},
    {792, 624, 442, 338},
    {858, 666, 482, 382},
    {929, 711, 509, 403},
    {1003, 779, 565, 439},
    {1091, 857, 611, 461},
    {1171, 911, 661, 511},
    {1273, 997, 715, 535},
    {1367, 1059, 751, 593},
    {1465, 1125, 805, 625},
    {1528, 1190, 868, 658},
    {1628, 1264, 908, 698},
    {1732, 1370, 982, 742},
    {1840, 1452, 1030, 790},
    {1952, 1538, 1112, 842},
    {2068, 1628, 1168, 898},
    {2188, 1722, 1228, 958},
    {2303, 1809, 1283, 983},
    {2431, 1911, 1351, 1051},
    {2563, 1989, 1423, 1093},
    {2699, 2099, 1499, 1139},
    {2809, 2213, 1579, 1219},
    {2953, 2331, 1663, 1273},
}};

}  // namespace

std::string_view to_string(EcLevel level) {
    switch (level) {
        case EcLevel::L: return "L";
        case EcLevel::M: return "M";
        case EcLevel::Q: return "Q";
        case EcLevel::H: return "H";
    }
    return "?";
}

std::optional<EcLevel> parse_ec_level(std::string_view text) {
    if (text == "L" || text == "l") return EcLevel::L;
    if (text == "M" || text == "m") return EcLevel::M;
    if (text == "Q" || text == "q") return EcLevel::Q;
    if (text == "H" || text == "h") return EcLevel::H;
    return std::nullopt;
}

std::size_t byte_capacity(int version, EcLevel level) {
    if (version < kMinVersion || version > kMaxVersion)
        throw std::out_of_range("QR version " + std::to_string(version) + " outside 1..40");
    return kByteCapacity[static_cast<std::size_t>(version - 1)][static_cast<std::size_t>(level)];
}

int min_version_for(std::size_t payload_bytes, EcLevel level) {
    if (payload_bytes == 0) throw std::invalid_argument("payload must not be empty");
    for (int v = kMinVersion; v <= kMaxVersion; ++v)
        if (byte_capacity(v, level) >= payload_bytes) return v;
    throw CapacityError(std::to_string(payload_bytes) + " bytes exceed the " +
                        std::to_string(byte_capacity(kMaxVersion, level)) + "-byte limit at EC " +
                        std::string(to_string(level)));
}

}  // namespace sqry::qr
