#include "veronese/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace veronese {
namespace {

using nlohmann::json;

// 2^53: the largest magnitude every IEEE-double JSON reader keeps exact.
const BigInt kJsonIntMax = BigInt(1) << 53;

json big_value(const BigInt& v) {
  if (v <= kJsonIntMax && -v <= kJsonIntMax) return json(v.convert_to<int64_t>());
  return json(v.str());
}

json to_json(const Report& r, bool with_meta) {
  json out = json::object();
  if (with_meta) {
    out["meta"] = {{"q", r.q},
                   {"n", r.n},
                   {"k", r.k},
                   {"modulus", r.modulus},
                   {"point_order_hash", r.point_order_hash},
                   {"version", kReportVersion}};
  }
  if (r.census) {
    out["census"] = {{"double_line", r.census->double_line},
                     {"two_lines", r.census->two_lines},
                     {"irreducible", r.census->irreducible},
                     {"single_point", r.census->single_point},
                     {"total", r.census->total()}};
  }
  if (r.configurations) {
    const ConfigurationCounts& c = *r.configurations;
    out["configurations"] = {{"points", c.points},
                             {"point_pairs", c.point_pairs},
                             {"triangles", c.triangles},
                             {"quadrilaterals", c.quadrilaterals},
                             {"lines", c.lines},
                             {"line_plus_point", c.line_plus_point}};
  }
  if (!r.betti.empty()) {
    json levels = json::array();
    for (const BettiTable& t : r.betti) {
      json entries = json::array();
      for (const auto& [key, value] : t.entries)
        entries.push_back({{"i", key.first}, {"j", key.second}, {"value", big_value(value)}});
      levels.push_back({{"level", t.level}, {"entries", entries}});
    }
    out["betti"] = levels;
  }
  if (!r.gwp.empty()) {
    json rows = json::array();
    for (const auto& [w, p] : r.gwp) {
      json coeffs = json::array();
      for (const BigInt& c : p.c) coeffs.push_back(big_value(c));
      rows.push_back({{"w", w}, {"coeffs", coeffs}});
    }
    out["gwp"] = rows;
  }
  if (!r.spectra.empty()) {
    json triples = json::array();
    size_t rmax = r.spectra.empty() ? 0 : r.spectra[0].size();
    for (size_t rank = 0; rank < rmax; ++rank)
      for (size_t w = 0; w < r.spectra.size(); ++w)
        if (r.spectra[w][rank] != 0)
          triples.push_back(
              {{"r", rank}, {"w", w}, {"count", big_value(r.spectra[w][rank])}});
    out["spectra"] = triples;
  }
  if (!r.words.empty()) {
    json scans = json::array();
    for (const auto& [card, counts] : r.words) {
      json rows = json::array();
      for (size_t w = 0; w < counts.size(); ++w)
        if (counts[w] != 0) rows.push_back({{"w", w}, {"count", big_value(counts[w])}});
      scans.push_back({{"cardinality", card}, {"counts", rows}});
    }
    out["words"] = scans;
  }
  if (!r.subcodes.empty()) {
    json scans = json::array();
    for (const auto& [rank, counts] : r.subcodes) {
      json rows = json::array();
      for (size_t w = 0; w < counts.size(); ++w)
        if (counts[w] != 0) rows.push_back({{"w", w}, {"count", big_value(counts[w])}});
      scans.push_back({{"rank", rank}, {"counts", rows}});
    }
    out["subcodes"] = scans;
  }
  if (!r.ladder.empty()) out["ladder"] = r.ladder;
  if (!r.verification.empty()) {
    json checks = json::array();
    for (const CheckResult& c : r.verification)
      checks.push_back({{"check", c.name},
                        {"status", c.status},
                        {"expected", c.expected},
                        {"got", c.got}});
    out["verification"] = checks;
  }
  return out;
}

void csv_section(std::ostringstream& os, const std::string& name, const std::string& header) {
  os << "[" << name << "]\n" << header << "\n";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string to_csv(const Report& r, bool with_meta) {
  std::ostringstream os;
  if (with_meta) {
    csv_section(os, "meta", "key,value");
    os << "q," << r.q << "\n";
    os << "n," << r.n << "\n";
    os << "k," << r.k << "\n";
    os << "modulus," << csv_escape(r.modulus) << "\n";
    os << "point_order_hash," << r.point_order_hash << "\n";
    os << "version," << kReportVersion << "\n\n";
  }
  if (r.census) {
    csv_section(os, "census", "double_line,two_lines,irreducible,single_point,total");
    os << r.census->double_line << "," << r.census->two_lines << ","
       << r.census->irreducible << "," << r.census->single_point << ","
       << r.census->total() << "\n\n";
  }
  if (r.configurations) {
    const ConfigurationCounts& c = *r.configurations;
    csv_section(os, "configurations",
                "points,point_pairs,triangles,quadrilaterals,lines,line_plus_point");
    os << c.points << "," << c.point_pairs << "," << c.triangles << ","
       << c.quadrilaterals << "," << c.lines << "," << c.line_plus_point << "\n\n";
  }
  if (!r.betti.empty()) {
    csv_section(os, "betti", "level,i,j,value");
    for (const BettiTable& t : r.betti)
      for (const auto& [key, value] : t.entries)
        os << t.level << "," << key.first << "," << key.second << "," << value.str()
           << "\n";
    os << "\n";
  }
  if (!r.gwp.empty()) {
    csv_section(os, "gwp", "w,degree,coeff");
    for (const auto& [w, p] : r.gwp)
      for (size_t t = 0; t < p.c.size(); ++t)
        os << w << "," << t << "," << p.c[t].str() << "\n";
    os << "\n";
  }
  if (!r.spectra.empty()) {
    csv_section(os, "spectra", "r,w,count");
    size_t rmax = r.spectra[0].size();
    for (size_t rank = 0; rank < rmax; ++rank)
      for (size_t w = 0; w < r.spectra.size(); ++w)
        if (r.spectra[w][rank] != 0)
          os << rank << "," << w << "," << r.spectra[w][rank].str() << "\n";
    os << "\n";
  }
  if (!r.words.empty()) {
    csv_section(os, "words", "cardinality,w,count");
    for (const auto& [card, counts] : r.words)
      for (size_t w = 0; w < counts.size(); ++w)
        if (counts[w] != 0) os << card << "," << w << "," << counts[w].str() << "\n";
    os << "\n";
  }
  if (!r.subcodes.empty()) {
    csv_section(os, "subcodes", "rank,w,count");
    for (const auto& [rank, counts] : r.subcodes)
      for (size_t w = 0; w < counts.size(); ++w)
        if (counts[w] != 0) os << rank << "," << w << "," << counts[w].str() << "\n";
    os << "\n";
  }
  if (!r.ladder.empty()) {
    csv_section(os, "ladder", "r,d");
    for (size_t i = 0; i < r.ladder.size(); ++i)
      os << (i + 1) << "," << r.ladder[i] << "\n";
    os << "\n";
  }
  if (!r.verification.empty()) {
    csv_section(os, "verification", "check,status,expected,got");
    for (const CheckResult& c : r.verification)
      os << csv_escape(c.name) << "," << c.status << "," << csv_escape(c.expected) << ","
         << csv_escape(c.got) << "\n";
    os << "\n";
  }
  return os.str();
}

std::string to_table(const Report& r, bool with_meta) {
  std::ostringstream os;
  if (with_meta) {
    os << "code: n=" << r.n << " k=" << r.k << " over " << r.modulus
       << " (q=" << r.q << ", point order hash " << r.point_order_hash
       << ", report v" << kReportVersion << ")\n\n";
  }
  if (r.census) {
    os << "conic census\n";
    os << "  repeated lines:  " << r.census->double_line << "\n";
    os << "  line pairs:      " << r.census->two_lines << "\n";
    os << "  irreducible:     " << r.census->irreducible << "\n";
    os << "  single point:    " << r.census->single_point << "\n";
    os << "  total:           " << r.census->total() << "\n\n";
  }
  if (r.configurations) {
    const ConfigurationCounts& c = *r.configurations;
    os << "configurations\n";
    os << "  points:          " << c.points << "\n";
    os << "  point pairs:     " << c.point_pairs << "\n";
    os << "  triangles:       " << c.triangles << "\n";
    os << "  quadrilaterals:  " << c.quadrilaterals << "\n";
    os << "  lines:           " << c.lines << "\n";
    os << "  line plus point: " << c.line_plus_point << "\n\n";
  }
  for (const BettiTable& t : r.betti) {
    os << "betti level " << t.level << " (effective dimension " << t.k_eff << ")\n";
    for (const auto& [key, value] : t.entries)
      if (!(key.first == 0 && key.second == 0))
        os << "  i=" << key.first << " j=" << key.second << "  " << value.str() << "\n";
    os << "\n";
  }
  if (!r.gwp.empty()) {
    os << "generalized weight polynomials\n";
    for (const auto& [w, p] : r.gwp) os << "  P_" << w << " = " << p.str() << "\n";
    os << "\n";
  }
  if (!r.spectra.empty()) {
    os << "higher weight spectra (r, w, count)\n";
    size_t rmax = r.spectra[0].size();
    for (size_t rank = 0; rank < rmax; ++rank)
      for (size_t w = 0; w < r.spectra.size(); ++w)
        if (r.spectra[w][rank] != 0)
          os << "  r=" << rank << " w=" << w << "  " << r.spectra[w][rank].str() << "\n";
    os << "\n";
  }
  for (const auto& [card, counts] : r.words) {
    os << "word weights over the " << card << "-element field\n";
    for (size_t w = 0; w < counts.size(); ++w)
      if (counts[w] != 0) os << "  w=" << w << "  " << counts[w].str() << "\n";
    os << "\n";
  }
  for (const auto& [rank, counts] : r.subcodes) {
    os << "support weights of " << rank << "-dimensional subcodes\n";
    for (size_t w = 0; w < counts.size(); ++w)
      if (counts[w] != 0) os << "  w=" << w << "  " << counts[w].str() << "\n";
    os << "\n";
  }
  if (!r.ladder.empty()) {
    os << "support-weight ladder\n ";
    for (uint64_t d : r.ladder) os << " " << d;
    os << "\n\n";
  }
  if (!r.verification.empty()) {
    os << "verification\n";
    for (const CheckResult& c : r.verification) {
      os << "  [" << c.status << "] " << c.name;
      if (c.status == "fail") os << "  expected " << c.expected << ", got " << c.got;
      if (c.status == "skipped" && !c.got.empty()) os << "  (" << c.got << ")";
      os << "\n";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "table") return ReportFormat::Table;
  throw std::invalid_argument("unknown report format: " + name);
}

std::string serialize_report(const Report& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(r, true).dump(2) + "\n";
    case ReportFormat::Csv:
      return to_csv(r, true);
    case ReportFormat::Table:
      return to_table(r, true);
  }
  throw std::logic_error("unreachable");
}

std::string serialize_payload(const Report& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(r, false).dump(2) + "\n";
    case ReportFormat::Csv:
      return to_csv(r, false);
    case ReportFormat::Table:
      return to_table(r, false);
  }
  throw std::logic_error("unreachable");
}

}  // namespace veronese
