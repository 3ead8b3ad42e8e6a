#include "eszk/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "eszk/error.hpp"

namespace eszk {
namespace {

using nlohmann::json;

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
    Position pos;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
    const auto pos = position_of(text, offset);
    throw ParseError(what, pos.line, pos.column);
}

// Offset of the first number token outside strings that is not a plain
// integer, or of the first occurrence of `fallback` when there is none.
std::size_t locate_bad_number(std::string_view text, std::string_view fallback) {
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') {
            in_string = true;
            continue;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            std::size_t end = i;
            bool integral = true;
            while (end < text.size() && std::string_view("+-0123456789.eE").find(text[end]) !=
                                            std::string_view::npos) {
                if (text[end] == '.' || text[end] == 'e' || text[end] == 'E') integral = false;
                ++end;
            }
            if (!integral) return i;
            i = end - 1;
        }
    }
    const auto at = text.find(fallback);
    return at == std::string_view::npos ? 0 : at;
}

std::int64_t coordinate(const json& value, std::string_view text) {
    if (!value.is_number_integer()) {
        fail_at(text, locate_bad_number(text, "\"vertices\""),
                "coordinate " + value.dump() + " is not an integer");
    }
    if (value.is_number_unsigned() && value.get<std::uint64_t>() >
                                          static_cast<std::uint64_t>(kCoordBound)) {
        throw InputError("coordinate " + value.dump() + " exceeds the bound 10^9");
    }
    return value.get<std::int64_t>();
}

Polygon parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("vertices"))
        fail_at(text, 0, "expected an object with a \"vertices\" array");
    const auto& vertices = doc["vertices"];
    if (!vertices.is_array())
        fail_at(text, locate_bad_number(text, "\"vertices\""), "\"vertices\" must be an array");
    if (vertices.empty()) throw InputError("polygon file contains no vertices");

    std::vector<Point> points;
    points.reserve(vertices.size());
    for (const auto& v : vertices) {
        if (!v.is_array() || v.size() != 2)
            fail_at(text, text.find("\"vertices\""), "each vertex must be an [x, y] pair");
        points.push_back({coordinate(v[0], text), coordinate(v[1], text)});
    }
    return Polygon(std::move(points));
}

Polygon parse_text(std::string_view text) {
    std::vector<Point> points;
    std::size_t line_start = 0;
    std::size_t line_no = 0;
    while (line_start <= text.size()) {
        auto line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        ++line_no;
        const auto line = text.substr(line_start, line_end - line_start);

        std::int64_t values[2];
        std::size_t count = 0;
        std::size_t i = 0;
        while (true) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            if (count == 2)
                throw ParseError("expected exactly two integers per line", line_no, i + 1);
            std::size_t end = i;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
                ++end;
            const auto token = line.substr(i, end - i);
            std::int64_t value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec == std::errc::result_out_of_range)
                throw InputError("coordinate " + std::string(token) + " on line " +
                                 std::to_string(line_no) + " exceeds the bound 10^9");
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw ParseError("'" + std::string(token) + "' is not an integer", line_no, i + 1);
            values[count++] = value;
            i = end;
        }
        if (count == 1) throw ParseError("expected two integers, found one", line_no, line.size() + 1);
        if (count == 2) {
            const Point p{values[0], values[1]};
            if (!within_bound(p))
                throw InputError("coordinate on line " + std::to_string(line_no) +
                                 " exceeds the bound 10^9");
            points.push_back(p);
        }
        line_start = line_end + 1;
    }
    if (points.empty()) throw InputError("polygon file contains no vertices");
    return Polygon(std::move(points));
}

}  // namespace

Polygon parse_polygon(std::string_view contents, PolygonFormat format) {
    if (format == PolygonFormat::detect) {
        const auto first = contents.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos) throw InputError("polygon file is empty");
        format = (contents[first] == '{' || contents[first] == '[') ? PolygonFormat::json
                                                                     : PolygonFormat::text;
    }
    return format == PolygonFormat::json ? parse_json(contents) : parse_text(contents);
}

std::string serialize_polygon(const Polygon& polygon, PolygonFormat format) {
    if (format == PolygonFormat::json) return json{{"vertices", vertices_to_json(polygon)}}.dump();
    std::string out;
    for (const auto& p : polygon) out += std::to_string(p.x) + ' ' + std::to_string(p.y) + '\n';
    return out;
}

Polygon read_polygon_file(const std::filesystem::path& path, PolygonFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_polygon(buffer.str(), format);
}

std::string digest(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

std::string digest(const Polygon& polygon) {
    return digest(serialize_polygon(polygon, PolygonFormat::text));
}

json vertices_to_json(const Polygon& polygon) {
    json out = json::array();
    for (const auto& p : polygon) out.push_back({p.x, p.y});
    return out;
}

Polygon vertices_from_json(const json& vertices) {
    if (!vertices.is_array() || vertices.empty())
        throw InputError("\"vertices\" must be a non-empty array");
    std::vector<Point> points;
    for (const auto& v : vertices) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer())
            throw InputError("each vertex must be an [x, y] integer pair");
        points.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
    }
    return Polygon(std::move(points));
}

json certificate_to_json(const Certificate& cert) {
    return {{"k", cert.k},
            {"vertices", vertices_to_json(cert.polygon)},
            {"claimed_bound", cert.claimed_bound},
            {"verified", cert.verified},
            {"subgon_total", cert.subgon_total}};
}

Certificate certificate_from_json(const json& record) {
    try {
        auto polygon = vertices_from_json(record.at("vertices"));
        Certificate cert{polygon,
                         record.at("k").get<std::size_t>(),
                         record.at("claimed_bound").get<std::size_t>(),
                         record.at("verified").get<bool>(),
                         record.at("subgon_total").get<std::uint64_t>(),
                         0};
        if (cert.claimed_bound != polygon.size() + 1)
            throw InputError("certificate claimed_bound must equal n + 1");
        return cert;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed certificate record: ") + e.what());
    }
}

json bounds_to_json(const FBoundRecord& record) {
    json out{{"k", record.k},
             {"lower", record.lower},
             {"lower_provenance", record.lower_provenance},
             {"upper", nullptr},
             {"upper_provenance", nullptr},
             {"symbolic_upper", nullptr}};
    if (record.upper) {
        out["upper"] = *record.upper;
        out["upper_provenance"] = record.upper_provenance;
    }
    if (record.symbolic_upper) out["symbolic_upper"] = *record.symbolic_upper;
    return out;
}

CertificateStore::CertificateStore(std::filesystem::path path) : path_(std::move(path)) {}

void CertificateStore::load() {
    certificates_.clear();
    std::ifstream in(path_);
    if (!in) return;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("store " + path_.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.contains("certificates")) return;
    for (const auto& record : doc["certificates"]) {
        const auto stored = certificate_from_json(record);
        auto cert = verify_certificate(stored.polygon, stored.k);
        if (cert.verified) certificates_.push_back(std::move(cert));
    }
}

void CertificateStore::save() const {
    json certs = json::array();
    std::vector<std::size_t> ks{3, 4};
    for (const auto& cert : certificates_) {
        certs.push_back(certificate_to_json(cert));
        ks.push_back(cert.k);
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    json bounds = json::array();
    for (auto k : ks) bounds.push_back(bounds_to_json(f_bounds(k, certificates_)));

    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_);
    if (!out) throw InputError("cannot write store " + path_.string());
    out << json{{"certificates", certs}, {"bounds", bounds}}.dump(2) << '\n';
}

bool CertificateStore::add(const Certificate& cert) {
    if (!cert.verified) return false;
    const bool present = std::any_of(certificates_.begin(), certificates_.end(), [&](const auto& c) {
        return c.k == cert.k && c.polygon == cert.polygon;
    });
    if (present) return false;
    certificates_.push_back(cert);
    return true;
}

std::filesystem::path resolve_store_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("ESZK_STORE"); env && *env) return env;
    return "eszk-store.json";
}

std::string render_svg(const Polygon& polygon) {
    constexpr double kSize = 800.0;
    constexpr double kMargin = 40.0;
    auto [min_x, max_x] = std::minmax_element(polygon.begin(), polygon.end(),
                                              [](Point a, Point b) { return a.x < b.x; });
    auto [min_y, max_y] = std::minmax_element(polygon.begin(), polygon.end(),
                                              [](Point a, Point b) { return a.y < b.y; });
    const double width = static_cast<double>(max_x->x - min_x->x);
    const double height = static_cast<double>(max_y->y - min_y->y);
    const double extent = std::max({width, height, 1.0});
    const double scale = (kSize - 2 * kMargin) / extent;
    const double off_x = kMargin + (kSize - 2 * kMargin - width * scale) / 2;
    const double off_y = kMargin + (kSize - 2 * kMargin - height * scale) / 2;

    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    auto emit = [&](Point p) {
        out << off_x + static_cast<double>(p.x - min_x->x) * scale << ','
            << kSize - off_y - static_cast<double>(p.y - min_y->y) * scale;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    const auto hull = convex_hull(polygon.vertices()).cycle;
    out << "<polygon fill=\"none\" stroke=\"#888\" stroke-width=\"2\" stroke-dasharray=\"8,6\" "
           "points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (i) out << ' ';
        emit(hull[i]);
    }
    out << "\"/>\n";

    out << "<path fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\" d=\"M ";
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        if (i) out << " L ";
        emit(polygon[i]);
    }
    out << " Z\"/>\n";

    for (std::size_t i = 0; i < polygon.size(); ++i) {
        out << "<circle r=\"4\" fill=\"#c03030\" cx=\"";
        out << off_x + static_cast<double>(polygon[i].x - min_x->x) * scale << "\" cy=\""
            << kSize - off_y - static_cast<double>(polygon[i].y - min_y->y) * scale << "\"/>\n";
        out << "<text font-size=\"14\" x=\"";
        out << off_x + static_cast<double>(polygon[i].x - min_x->x) * scale + 6 << "\" y=\""
            << kSize - off_y - static_cast<double>(polygon[i].y - min_y->y) * scale - 6 << "\">"
            << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace eszk
