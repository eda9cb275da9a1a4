#pragma once
// The projective plane PG(2, q): normalized points and lines, incidence
// tables, classification of plane conics by their rational point sets, and
// direct enumeration of the small point/line configurations the rest of the
// library needs (triangles, quadrilaterals, line-plus-external-point, ...).
//
// Points and lines are coordinate triples normalized so the first nonzero
// entry is 1, ordered lexicographically by encoding; all indices below refer
// to those orders. A conic is a nonzero sextuple (a,b,c,d,e,f) representing
// a x^2 + b xy + c xz + d y^2 + e yz + f z^2, one normalized representative
// per projective class.

#include "veronese/common.hpp"
#include "veronese/field.hpp"

#include <array>
#include <functional>
#include <vector>

namespace veronese {

struct Plane {
  FieldPtr field;
  uint32_t q = 0;  // |field|
  std::vector<std::array<uint32_t, 3>> points;  // q^2+q+1 normalized triples
  std::vector<std::array<uint32_t, 3>> lines;   // q^2+q+1 normalized coefficient triples
  std::vector<std::vector<uint16_t>> line_points;  // sorted point indices per line
  std::vector<uint8_t> incidence;     // [line * n + point]
  std::vector<uint16_t> line_through; // [i * n + j] = the line through points i != j
  // Quadric monomial vector (x^2, xy, xz, y^2, yz, z^2) per point; these are
  // exactly the generator columns of the degree-2 Veronese code.
  std::vector<std::array<uint32_t, 6>> monomials;

  size_t n_points() const { return points.size(); }
  size_t n_lines() const { return lines.size(); }
  bool on(size_t line, size_t pt) const { return incidence[line * n_points() + pt] != 0; }
  uint16_t line_of(size_t i, size_t j) const { return line_through[i * n_points() + j]; }
  bool collinear(size_t i, size_t j, size_t k) const {
    return on(line_of(i, j), k);
  }
};

Plane build_plane(const FieldPtr& f);

using Conic = std::array<uint32_t, 6>;

enum class ConicClass { DoubleLine, TwoDistinctLines, Irreducible, SinglePoint };

const char* conic_class_name(ConicClass c);

// Value of the conic form at a point (by index).
uint32_t eval_conic(const Plane& P, const Conic& c, size_t pt);
// Sorted indices of the conic's rational points.
std::vector<uint16_t> conic_points(const Plane& P, const Conic& c);
// Classify by point-count signature (1 / 2q+1 / q+1 split by collinearity);
// avoids symmetric-matrix rank arguments that degenerate in characteristic 2.
ConicClass classify_conic(const Plane& P, const Conic& c);

struct ConicCensus {
  uint64_t double_line = 0, two_lines = 0, irreducible = 0, single_point = 0;
  uint64_t total() const { return double_line + two_lines + irreducible + single_point; }
  bool operator==(const ConicCensus&) const = default;
};

// Classify every conic class representative ((q^6-1)/(q-1) of them).
ConicCensus conic_census(const Plane& P, unsigned threads = 1);

// Point sets (sorted indices) of all irreducible conics, in enumeration
// order. Used to generate nullity-1 cycles structurally.
std::vector<std::vector<uint16_t>> irreducible_conic_point_sets(const Plane& P);

struct ConfigurationCounts {
  uint64_t points = 0;           // single points
  uint64_t point_pairs = 0;      // unordered pairs of distinct points
  uint64_t triangles = 0;        // 3 points, not collinear
  uint64_t quadrilaterals = 0;   // 4 points, no 3 collinear
  uint64_t lines = 0;            // lines
  uint64_t line_plus_point = 0;  // a line together with a point off it
  bool operator==(const ConfigurationCounts&) const = default;
};

// All counts by direct enumeration (no closed forms).
ConfigurationCounts count_configurations(const Plane& P, unsigned threads = 1);

}  // namespace veronese
