#include "sqry/golden.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "sqry/codec.hpp"
#include "sqry/text.hpp"

namespace sqry::golden {

namespace {

using nlohmann::json;

vm::Status parse_status(const std::string& s) {
    if (s == "halted") return vm::Status::Halted;
    if (s == "awaiting_input") return vm::Status::AwaitingInput;
    throw std::runtime_error("golden vector: unknown final_status '" + s + "'");
}

std::string describe(const vm::Event& e) {
    if (e.kind == vm::Event::Kind::Output) return "output \"" + e.text + "\"";
    std::string out = "prompt \"" + e.text + "\" [";
    for (std::size_t i = 0; i < e.options.size(); ++i) out += (i ? ", " : "") + e.options[i];
    return out + "]";
}

}  // namespace

GoldenVector parse_vector(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("golden vector: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kFormatTag)
            throw std::runtime_error("golden vector: unsupported format tag");
        GoldenVector v;
        v.name = doc.at("name").get<std::string>();
        v.description = doc.value("description", "");
        auto bytes = text::from_hex(doc.at("payload_hex").get<std::string>());
        if (!bytes) throw std::runtime_error("golden vector: payload_hex is not hex");
        v.payload = std::move(*bytes);
        v.answers = doc.at("answers").get<std::vector<std::string>>();
        const auto& expect = doc.at("expect");
        if (expect.contains("error")) {
            v.expected_error = expect.at("error").get<std::string>();
            return v;
        }
        for (const auto& ev : expect.at("events")) {
            if (ev.contains("output")) {
                v.expected.events.push_back({vm::Event::Kind::Output, ev.at("output").get<std::string>(), {}});
            } else {
                v.expected.events.push_back({vm::Event::Kind::Prompt, ev.at("prompt").get<std::string>(),
                                             ev.at("options").get<std::vector<std::string>>()});
            }
        }
        v.expected.final_status = parse_status(expect.at("final_status").get<std::string>());
        return v;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("golden vector: ") + e.what());
    }
}

std::string serialize_vector(const GoldenVector& v) {
    json doc = json::object();
    doc["format"] = kFormatTag;
    doc["name"] = v.name;
    if (!v.description.empty()) doc["description"] = v.description;
    doc["payload_hex"] = text::to_hex(v.payload);
    doc["answers"] = v.answers;
    json expect = json::object();
    if (v.expected_error) {
        expect["error"] = *v.expected_error;
    } else {
        json events = json::array();
        for (const auto& e : v.expected.events) {
            if (e.kind == vm::Event::Kind::Output)
                events.push_back({{"output", e.text}});
            else
                events.push_back({{"prompt", e.text}, {"options", e.options}});
        }
        expect["events"] = std::move(events);
        expect["final_status"] = std::string(vm::to_string(v.expected.final_status));
    }
    doc["expect"] = std::move(expect);
    return doc.dump(2) + "\n";
}

GoldenVector record_vector(std::string name, std::string description, std::vector<std::uint8_t> payload,
                           std::vector<std::string> answers) {
    GoldenVector v{std::move(name), std::move(description), std::move(payload), std::move(answers), {}, {}};
    try {
        v.expected = vm::run_script(codec::decode_payload(v.payload), v.answers);
    } catch (const codec::CodecError& e) {
        v.expected_error = e.kind();
    }
    return v;
}

CheckResult check_vector(const GoldenVector& v) {
    vm::Trace actual;
    try {
        actual = vm::run_script(codec::decode_payload(v.payload), v.answers);
    } catch (const codec::CodecError& e) {
        if (v.expected_error == e.kind()) return {true, {}};
        return {false, "decode failed with " + e.kind()};
    }
    if (v.expected_error) return {false, "expected " + *v.expected_error + " but payload decoded"};

    const auto& want = v.expected.events;
    const auto& got = actual.events;
    for (std::size_t i = 0; i < std::max(want.size(), got.size()); ++i) {
        if (i >= got.size()) return {false, "missing event " + std::to_string(i) + ": " + describe(want[i])};
        if (i >= want.size()) return {false, "extra event " + std::to_string(i) + ": " + describe(got[i])};
        if (!(want[i] == got[i]))
            return {false, "event " + std::to_string(i) + ": expected " + describe(want[i]) + ", got " +
                               describe(got[i])};
    }
    if (actual.final_status != v.expected.final_status)
        return {false, "final status " + std::string(vm::to_string(actual.final_status))};
    return {true, {}};
}

std::vector<std::filesystem::path> list_vectors(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sqry::golden
