#include <png.h>

#include <stdexcept>
#include <string>

#include "CreateBarcode.h"
#include "ReadBarcode.h"
#include "sqry/qr.hpp"

namespace sqry::qr {

Symbol embed_qr(const codec::Payload& payload, EcLevel level) {
    const int version = min_version_for(payload.bytes.size(), level);
    constexpr const char* kEc[] = {"L", "M", "Q", "H"};
    std::string options = std::string("ecLevel=") + kEc[static_cast<int>(level)] +
                          ",eci=0,version=" + std::to_string(version);

    auto barcode = ZXing::CreateBarcodeFromBytes(payload.bytes,
                                                 ZXing::CreatorOptions(ZXing::BarcodeFormat::QRCode, options));
    ZXing::ImageView view = barcode.symbol();

    Symbol symbol;
    symbol.version = version;
    symbol.ec_level = level;
    symbol.size = view.width();
    if (view.width() != 17 + 4 * version || view.height() != view.width())
        throw std::runtime_error("QR writer produced an unexpected symbol size");
    symbol.modules.resize(static_cast<std::size_t>(symbol.size * symbol.size));
    for (int y = 0; y < symbol.size; ++y)
        for (int x = 0; x < symbol.size; ++x)
            symbol.modules[static_cast<std::size_t>(y * symbol.size + x)] = *view.data(x, y) < 128 ? 1 : 0;
    return symbol;
}

Raster rasterize(const Symbol& symbol, int scale, int quiet_zone) {
    Raster img;
    img.width = img.height = (symbol.size + 2 * quiet_zone) * scale;
    img.pixels.assign(static_cast<std::size_t>(img.width * img.height), 255);
    for (int y = 0; y < img.height; ++y) {
        int my = y / scale - quiet_zone;
        if (my < 0 || my >= symbol.size) continue;
        for (int x = 0; x < img.width; ++x) {
            int mx = x / scale - quiet_zone;
            if (mx >= 0 && mx < symbol.size && symbol.dark(mx, my))
                img.pixels[static_cast<std::size_t>(y * img.width + x)] = 0;
        }
    }
    return img;
}

std::string render_svg(const Symbol& symbol, int quiet_zone) {
    const int extent = symbol.size + 2 * quiet_zone;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " + std::to_string(extent) +
           " " + std::to_string(extent) + "\" shape-rendering=\"crispEdges\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n<path fill=\"#000000\" d=\"";
    for (int y = 0; y < symbol.size; ++y) {
        for (int x = 0; x < symbol.size;) {
            if (!symbol.dark(x, y)) {
                ++x;
                continue;
            }
            int run = 1;
            while (x + run < symbol.size && symbol.dark(x + run, y)) ++run;
            out += "M" + std::to_string(x + quiet_zone) + "," + std::to_string(y + quiet_zone) + "h" +
                   std::to_string(run) + "v1h-" + std::to_string(run) + "z";
            x += run;
        }
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::vector<std::uint8_t> encode_png(const Raster& image) {
    png_image desc{};
    desc.version = PNG_IMAGE_VERSION;
    desc.width = static_cast<png_uint_32>(image.width);
    desc.height = static_cast<png_uint_32>(image.height);
    desc.format = PNG_FORMAT_GRAY;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&desc, nullptr, &size, 0, image.pixels.data(), 0, nullptr))
        throw std::runtime_error(std::string("png: ") + desc.message);
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&desc, out.data(), &size, 0, image.pixels.data(), 0, nullptr))
        throw std::runtime_error(std::string("png: ") + desc.message);
    out.resize(size);
    return out;
}

Raster decode_png(std::span<const std::uint8_t> data) {
    png_image desc{};
    desc.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&desc, data.data(), data.size()))
        throw std::runtime_error(std::string("png: ") + desc.message);
    desc.format = PNG_FORMAT_GRAY;

    Raster img;
    img.width = static_cast<int>(desc.width);
    img.height = static_cast<int>(desc.height);
    img.pixels.resize(PNG_IMAGE_SIZE(desc));
    // Transparent areas composite onto white, like a printed label.
    png_color white{255, 255, 255};
    if (!png_image_finish_read(&desc, &white, img.pixels.data(), 0, nullptr)) {
        png_image_free(&desc);
        throw std::runtime_error(std::string("png: ") + desc.message);
    }
    return img;
}

std::optional<std::vector<std::uint8_t>> scan(const Raster& image) {
    ZXing::ImageView view(image.pixels.data(), image.width, image.height, ZXing::ImageFormat::Lum);
    auto result = ZXing::ReadBarcode(view, ZXing::ReaderOptions().formats(ZXing::BarcodeFormat::QRCode));
    if (!result.isValid()) return std::nullopt;
    return result.bytes();
}

}  // namespace sqry::qr
