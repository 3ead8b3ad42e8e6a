#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eszk/extremal.hpp"
#include "eszk/geometry.hpp"

namespace eszk {

enum class PolygonFormat { detect, json, text };

/// Reads {"vertices": [[x, y], ...]} or one "x y" pair per line. Blank
/// lines and surrounding whitespace are ignored in text form. Throws
/// ParseError (with line/column) for malformed or non-integer input and
/// InputError for empty input or coordinates beyond the bound.
Polygon parse_polygon(std::string_view contents, PolygonFormat format = PolygonFormat::detect);

std::string serialize_polygon(const Polygon& polygon, PolygonFormat format);

Polygon read_polygon_file(const std::filesystem::path& path,
                          PolygonFormat format = PolygonFormat::detect);

/// Hex FNV-1a digest of the canonical text serialization.
std::string digest(const Polygon& polygon);
std::string digest(std::string_view text);

nlohmann::json vertices_to_json(const Polygon& polygon);
Polygon vertices_from_json(const nlohmann::json& vertices);

/// {"k", "vertices", "claimed_bound", "verified", "subgon_total"}.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& record);

nlohmann::json bounds_to_json(const FBoundRecord& record);

/// JSON file holding certificates and the bound table derived from them.
/// Certificates read from disk are re-verified before they count.
class CertificateStore {
public:
    explicit CertificateStore(std::filesystem::path path);

    /// Missing file means an empty store.
    void load();
    void save() const;

    /// Adds a verified certificate unless an identical one is present.
    /// Returns true if the store changed.
    bool add(const Certificate& cert);

    const std::vector<Certificate>& certificates() const noexcept { return certificates_; }
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    std::vector<Certificate> certificates_;
};

/// Store location: explicit flag, then $ESZK_STORE, then ./eszk-store.json.
std::filesystem::path resolve_store_path(const std::string& flag);

/// 800x800 SVG: polygon edges as one solid path, hull boundary dashed.
std::string render_svg(const Polygon& polygon);

}  // namespace eszk
