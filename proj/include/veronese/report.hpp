#pragma once
// Deterministic report assembly and serialization (JSON / CSV / text
// table). Reports carry a metadata block (code parameters, modulus,
// point-order hash, version) plus optional payload sections; emission is
// byte-identical for identical payloads regardless of thread count or
// run, so independent runs can be compared directly. Integers above 2^53
// are serialized as exact decimal strings in JSON to protect readers that
// parse numbers as doubles.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veronese/betti.hpp"
#include "veronese/plane.hpp"
#include "veronese/weights.hpp"

namespace veronese {

inline constexpr const char* kReportVersion = "1.0.0";

enum class ReportFormat { Json, Csv, Table };

// Parse "json" / "csv" / "table"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& name);

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail", or "skipped"
  std::string expected;
  std::string got;  // for "skipped", the reason
};

struct Report {
  // Metadata.
  uint32_t q = 0;
  uint64_t n = 0, k = 0;
  std::string modulus;  // full field tower description
  uint64_t point_order_hash = 0;

  // Payload sections; empty/absent sections are omitted from output.
  std::optional<ConicCensus> census;
  std::optional<ConfigurationCounts> configurations;
  std::vector<BettiTable> betti;
  std::vector<std::pair<uint64_t, IntPolynomial>> gwp;  // (w, P_w), nonzero only
  std::vector<std::vector<BigInt>> spectra;             // [w][r]
  // Oracle scans: full-enumeration word counts per scanned field
  // cardinality, and subcode support counts per dimension.
  std::vector<std::pair<uint64_t, std::vector<BigInt>>> words;     // (cardinality, counts by w)
  std::vector<std::pair<uint32_t, std::vector<BigInt>>> subcodes;  // (rank, counts by w)
  std::vector<uint64_t> ladder;
  std::vector<CheckResult> verification;
};

// Full serialization, metadata included.
std::string serialize_report(const Report& r, ReportFormat format);

// Payload-only serialization (no metadata block). Two runs that must agree
// up to field-construction details -- e.g. the same code built with a
// different irreducible modulus -- are compared on these bytes.
std::string serialize_payload(const Report& r, ReportFormat format);

}  // namespace veronese
