#pragma once

#include <string>
#include <vector>

#include "nfp/extract.hpp"
#include "nfp/geometry.hpp"

namespace nfp {

inline constexpr const char* kToolVersion = "1.0.0";

struct PieceDocument {
    std::string name;
    std::string units = "mm";
    Piece piece;
};

struct NfpDocument {
    std::string stationary;
    std::string orbital;
    NfpResult result;
    double epsilon = 0.0;
    std::string tool_version = kToolVersion;
};

// Parses a JSON piece document. The outer ring is normalized to CCW and
// holes to CW; flips are reported through `warnings`. Throws
// std::runtime_error with a field-specific message on malformed input,
// self-intersecting rings, or holes not contained in the outer ring.
PieceDocument parse_piece(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string serialize_piece(const PieceDocument& doc);

NfpDocument parse_nfp(const std::string& text);
std::string serialize_nfp(const NfpDocument& doc);

// Boolean results: a list of pieces under an operation label.
std::string serialize_pieces(const std::string& operation, const std::vector<Piece>& pieces,
                             double epsilon);

// Decomposition results: the convex components of one piece.
std::string serialize_components(const std::string& name, const std::vector<Contour>& components,
                                 double epsilon);

// Standalone SVG. NFP regions use even-odd fill so holes read as voids;
// slides are dashed polylines; fits are circles with radius 1.5% of the
// bounding-box diagonal. No timestamps or other run-varying metadata.
std::string render_svg(const NfpResult& result);
std::string render_svg(const std::vector<Piece>& pieces);

}  // namespace nfp
