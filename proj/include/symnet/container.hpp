#pragma once

#include <iosfwd>
#include <string>

#include "symnet/compression.hpp"

namespace symnet {

inline constexpr int kContainerVersion = 1;

// Hexadecimal floating-point text, exact in both directions.
std::string HexDouble(double x);
double ParseHexDouble(const std::string& text);

// One JSON document: header {format, format_version, n, m}, the orbit map,
// B as sparse triplets, the annotation and the label map.
void WriteCompressed(const CompressedMeasure& c, std::ostream& out,
                     const std::string& measure = "");
CompressedMeasure ReadCompressed(std::istream& in, std::string* measure = nullptr);

}  // namespace symnet
