#ifndef POLYSMOOTH_CERTJSON_HPP
#define POLYSMOOTH_CERTJSON_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "polysmooth/constructions.hpp"

namespace polysmooth {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kCertSchemaVersion = 1;

/// Versioned JSON document for a certificate; `verified`, when present,
/// records the verification mode and verdict alongside it.
OrderedJson certificate_to_json(const Certificate& c,
                                const std::optional<VerifyReport>& verified = std::nullopt);

Certificate certificate_from_json(const OrderedJson& doc);
std::optional<VerifyReport> verify_report_from_json(const OrderedJson& doc);

/// Deterministic rendering (two-space indent, fields in schema order);
/// to_string(from_string(s)) == s for documents produced here.
std::string certificate_to_string(const Certificate& c,
                                  const std::optional<VerifyReport>& verified = std::nullopt);
Certificate certificate_from_string(const std::string& text);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace polysmooth

#endif
